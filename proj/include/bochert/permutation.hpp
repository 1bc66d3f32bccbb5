#pragma once

// Permutations on [0, n) acting on the right: alpha^(pq) = (alpha^p)^q.
// Text I/O is 1-based disjoint-cycle notation, "(1,2,3)(4,5)"; "()" is the identity.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bochert {

using Point = std::uint32_t;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class DegreeMismatch : public Error {
public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs);
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Sorted set of points of a fixed ambient degree.
class PointSet {
public:
  PointSet() = default;
  explicit PointSet(std::size_t degree) : degree_(degree) {}
  PointSet(std::size_t degree, std::vector<Point> members);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Point p) const;
  void insert(Point p);
  void erase(Point p);

  std::span<const Point> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Point front() const { return members_.front(); }

  bool is_subset_of(const PointSet &other) const;

  friend PointSet operator|(const PointSet &a, const PointSet &b);
  friend PointSet operator&(const PointSet &a, const PointSet &b);
  friend PointSet operator-(const PointSet &a, const PointSet &b);
  friend bool operator==(const PointSet &, const PointSet &) = default;

  /// 1-based, e.g. "{1,4,7}".
  std::string to_string() const;

private:
  std::size_t degree_ = 0;
  std::vector<Point> members_;
};

class Permutation {
public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Throws PreconditionError unless `images` is a bijection of [0, n).
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  Point image(Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  /// Number of moved points.
  std::size_t support_size() const;
  std::size_t fixed_count() const { return degree() - support_size(); }
  /// Least moved point; degree() for the identity.
  Point least_moved_point() const;

  /// this first, then q.
  Permutation operator*(const Permutation &q) const;
  Permutation inverse() const;

  /// The set's image {alpha^p : alpha in s}.
  PointSet image_of(const PointSet &s) const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

Permutation parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(const Permutation &p);

Permutation compose(const Permutation &p, const Permutation &q);
Permutation inverse(const Permutation &p);
/// g^-1 u g; its support is supp(u)^g.
Permutation conjugate(const Permutation &u, const Permutation &g);
/// u v u^-1 v^-1.
Permutation commutator(const Permutation &u, const Permutation &v);

PointSet support(const Permutation &p);
PointSet fixed_points(const Permutation &p);

struct SupportFix {
  PointSet support;
  PointSet fix;
};
SupportFix support_fix(const Permutation &p);

/// p^k for any integer k (negative powers use the inverse).
Permutation power(const Permutation &p, std::int64_t k);
/// lcm of the cycle lengths.
std::uint64_t element_order(const Permutation &p);
/// p^(order/q) for the smallest prime q dividing order(p). Throws on the identity.
Permutation prime_order_witness(const Permutation &p);

/// Disjoint cycles of length >= 2, each starting at its least point, sorted by that point.
std::vector<std::vector<Point>> cycles(const Permutation &p);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace bochert
