#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace metric_lines {

using Point = std::size_t;

// Unordered pair stored with first < second.
struct PointPair {
  Point first = 0;
  Point second = 0;

  static PointPair of(Point a, Point b) { return a < b ? PointPair{a, b} : PointPair{b, a}; }

  friend auto operator<=>(const PointPair&, const PointPair&) = default;
};

// Subset of {0..n-1}.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : bits_(universe) {}
  PointSet(std::size_t universe, std::initializer_list<Point> points);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool full() const { return bits_.all(); }

  bool contains(Point p) const { return p < bits_.size() && bits_.test(p); }
  void insert(Point p) { bits_.set(p); }
  void erase(Point p) { bits_.reset(p); }

  bool is_subset_of(const PointSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool is_proper_subset_of(const PointSet& other) const {
    return bits_.is_proper_subset_of(other.bits_);
  }

  std::vector<Point> members() const;

  // "{0,2,3}"
  std::string to_string() const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.bits_ == b.bits_; }
  // Orders by sorted member list, lexicographically.
  friend bool operator<(const PointSet& a, const PointSet& b);

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

}  // namespace metric_lines
