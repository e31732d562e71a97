#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace hallforge {

// Append-only memo table safe for concurrent readers. Values are computed
// outside the lock; when two threads race on a key the first insertion
// wins, which is harmless because every computation is deterministic.
template <class Key, class Value>
class ConcurrentMemo {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return *it->second;
    }
    auto value = std::make_shared<const Value>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, std::move(value));
    return *it->second;
  }

  const Value* find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : it->second.get();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> entries_;
};

}  // namespace hallforge
