#include "bochert/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace bochert {

DegreeMismatch::DegreeMismatch(std::size_t lhs, std::size_t rhs)
    : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

namespace {

void require_same_degree(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch(p.degree(), q.degree());
}

} // namespace

// ---------------------------------------------------------------- PointSet

PointSet::PointSet(std::size_t degree, std::vector<Point> members)
    : degree_(degree), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= degree_)
    throw PreconditionError("point " + std::to_string(members_.back() + 1) +
                            " outside degree " + std::to_string(degree_));
}

bool PointSet::contains(Point p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

void PointSet::insert(Point p) {
  if (p >= degree_)
    throw PreconditionError("point " + std::to_string(p + 1) + " outside degree " +
                            std::to_string(degree_));
  auto it = std::lower_bound(members_.begin(), members_.end(), p);
  if (it == members_.end() || *it != p)
    members_.insert(it, p);
}

void PointSet::erase(Point p) {
  auto it = std::lower_bound(members_.begin(), members_.end(), p);
  if (it != members_.end() && *it == p)
    members_.erase(it);
}

bool PointSet::is_subset_of(const PointSet &other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

PointSet operator|(const PointSet &a, const PointSet &b) {
  PointSet r(std::max(a.degree_, b.degree_));
  std::set_union(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                 std::back_inserter(r.members_));
  return r;
}

PointSet operator&(const PointSet &a, const PointSet &b) {
  PointSet r(std::max(a.degree_, b.degree_));
  std::set_intersection(a.members_.begin(), a.members_.end(), b.members_.begin(),
                        b.members_.end(), std::back_inserter(r.members_));
  return r;
}

PointSet operator-(const PointSet &a, const PointSet &b) {
  PointSet r(a.degree_);
  std::set_difference(a.members_.begin(), a.members_.end(), b.members_.begin(),
                      b.members_.end(), std::back_inserter(r.members_));
  return r;
}

std::string PointSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(members_[i] + 1);
  }
  return s + "}";
}

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw PreconditionError("image sequence is not a bijection");
    seen[p] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::size_t Permutation::support_size() const {
  std::size_t k = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    k += images_[i] != i;
  return k;
}

Point Permutation::least_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

Permutation Permutation::operator*(const Permutation &q) const {
  require_same_degree(*this, q);
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[i] = q.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

PointSet Permutation::image_of(const PointSet &s) const {
  std::vector<Point> out;
  out.reserve(s.size());
  for (Point p : s)
    out.push_back(images_[p]);
  return PointSet(degree(), std::move(out));
}

// ------------------------------------------------------------ cycle codec

namespace {

class CycleParser {
public:
  CycleParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

  Permutation run() {
    if (degree_ < 1)
      throw ParseError("degree must be at least 1");
    std::vector<Point> images(degree_);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree_, false);

    skip_ws();
    if (at_end())
      throw ParseError("empty cycle text");
    while (!at_end()) {
      expect('(');
      std::vector<Point> cycle;
      skip_ws();
      if (peek() != ')') {
        for (;;) {
          Point p = read_point();
          if (used[p])
            throw ParseError("repeated point " + std::to_string(p + 1));
          used[p] = true;
          cycle.push_back(p);
          skip_ws();
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          break;
        }
      }
      expect(')');
      for (std::size_t i = 0; i < cycle.size(); ++i)
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      skip_ws();
    }
    return Permutation(std::move(images));
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos_));
    ++pos_;
  }

  Point read_point() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > degree_ + 1)
        value = degree_ + 1; // saturate; reported below
      ++pos_;
    }
    if (pos_ == start)
      throw ParseError("expected a point at offset " + std::to_string(start));
    if (value < 1 || value > degree_)
      throw ParseError("point " + std::string(text_.substr(start, pos_ - start)) +
                       " out of range 1.." + std::to_string(degree_));
    return static_cast<Point>(value - 1);
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

} // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  return CycleParser(text, degree).run();
}

std::vector<std::vector<Point>> cycles(const Permutation &p) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start)
      continue;
    std::vector<Point> cycle;
    for (Point q = start; !seen[q]; q = p(q)) {
      seen[q] = true;
      cycle.push_back(q);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string format_cycles(const Permutation &p) {
  auto cs = cycles(p);
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (const auto &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        os << ',';
      os << c[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

// ---------------------------------------------------------------- algebra

Permutation compose(const Permutation &p, const Permutation &q) { return p * q; }

Permutation inverse(const Permutation &p) { return p.inverse(); }

Permutation conjugate(const Permutation &u, const Permutation &g) {
  require_same_degree(u, g);
  // g^-1 u g maps alpha^g to (alpha^u)^g.
  std::vector<Point> images(u.degree());
  for (Point a = 0; a < u.degree(); ++a)
    images[g(a)] = g(u(a));
  return Permutation(std::move(images));
}

Permutation commutator(const Permutation &u, const Permutation &v) {
  require_same_degree(u, v);
  return u * v * u.inverse() * v.inverse();
}

PointSet support(const Permutation &p) {
  std::vector<Point> s;
  for (Point a = 0; a < p.degree(); ++a)
    if (p(a) != a)
      s.push_back(a);
  return PointSet(p.degree(), std::move(s));
}

PointSet fixed_points(const Permutation &p) {
  std::vector<Point> s;
  for (Point a = 0; a < p.degree(); ++a)
    if (p(a) == a)
      s.push_back(a);
  return PointSet(p.degree(), std::move(s));
}

SupportFix support_fix(const Permutation &p) { return {support(p), fixed_points(p)}; }

Permutation power(const Permutation &p, std::int64_t k) {
  Permutation base = k < 0 ? p.inverse() : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Permutation result(p.degree());
  while (e) {
    if (e & 1)
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::uint64_t element_order(const Permutation &p) {
  std::uint64_t order = 1;
  for (const auto &c : cycles(p))
    order = std::lcm(order, static_cast<std::uint64_t>(c.size()));
  return order;
}

Permutation prime_order_witness(const Permutation &p) {
  if (p.is_identity())
    throw PreconditionError("prime_order_witness: identity has no prime-order power");
  std::uint64_t order = element_order(p);
  std::uint64_t q = 2;
  while (order % q != 0)
    ++q;
  return power(p, static_cast<std::int64_t>(order / q));
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  // FNV-1a over the image sequence.
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace bochert
