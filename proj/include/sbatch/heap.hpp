#pragma once

// Array-backed binary max-heap routines with an optional position tracker.
// The tracker is called as track(item, index) whenever an item lands on a new
// array index, which lets callers delete arbitrary elements in O(log n).

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace sbatch::heap {

struct NoTrack {
  template <class T>
  void operator()(const T&, std::size_t) const {}
};

template <class T, class Less, class Track = NoTrack>
void sift_up(std::vector<T>& a, std::size_t i, Less less, Track track = {}) {
  T item = std::move(a[i]);
  while (i > 0) {
    std::size_t parent = (i - 1) / 2;
    if (!less(a[parent], item)) break;
    a[i] = std::move(a[parent]);
    track(a[i], i);
    i = parent;
  }
  a[i] = std::move(item);
  track(a[i], i);
}

/// MAX-HEAPIFY: restores the heap property below index i.
template <class T, class Less, class Track = NoTrack>
void sift_down(std::vector<T>& a, std::size_t i, Less less, Track track = {}) {
  const std::size_t size = a.size();
  T item = std::move(a[i]);
  for (;;) {
    std::size_t child = 2 * i + 1;
    if (child >= size) break;
    if (child + 1 < size && less(a[child], a[child + 1])) ++child;
    if (!less(item, a[child])) break;
    a[i] = std::move(a[child]);
    track(a[i], i);
    i = child;
  }
  a[i] = std::move(item);
  track(a[i], i);
}

/// BUILD-MAX-HEAP.
template <class T, class Less, class Track = NoTrack>
void build(std::vector<T>& a, Less less, Track track = {}) {
  for (std::size_t i = 0; i < a.size(); ++i) track(a[i], i);
  for (std::size_t i = a.size() / 2; i-- > 0;) sift_down(a, i, less, track);
}

/// MAX-HEAP-INSERT.
template <class T, class Less, class Track = NoTrack>
void insert(std::vector<T>& a, T item, Less less, Track track = {}) {
  a.push_back(std::move(item));
  sift_up(a, a.size() - 1, less, track);
}

/// Removes the element at index i.
template <class T, class Less, class Track = NoTrack>
T erase_at(std::vector<T>& a, std::size_t i, Less less, Track track = {}) {
  assert(i < a.size());
  T out = std::move(a[i]);
  if (i + 1 == a.size()) {
    a.pop_back();
    return out;
  }
  a[i] = std::move(a.back());
  a.pop_back();
  if (i > 0 && less(a[(i - 1) / 2], a[i]))
    sift_up(a, i, less, track);
  else
    sift_down(a, i, less, track);
  return out;
}

/// MAX-HEAP-EXTRACT.
template <class T, class Less, class Track = NoTrack>
T extract_max(std::vector<T>& a, Less less, Track track = {}) {
  return erase_at(a, 0, less, track);
}

template <class T, class Less>
bool is_heap(const std::vector<T>& a, Less less) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (less(a[(i - 1) / 2], a[i])) return false;
  return true;
}

}  // namespace sbatch::heap
