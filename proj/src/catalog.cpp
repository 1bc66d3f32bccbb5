#include "bochert/catalog.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>

namespace bochert {

namespace {

// Standard generators (GAP's MathieuGroup); trusted only after the order and transitivity checks.
constexpr std::string_view kM11[] = {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"};
constexpr std::string_view kM12[] = {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)",
                                     "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"};
constexpr std::string_view kM23[] = {
    "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
    "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"};
constexpr std::string_view kM24[] = {
    "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
    "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
    "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)"};

bool is_prime(unsigned q) {
  if (q < 2)
    return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0)
      return false;
  return true;
}

/// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q) {
  for (unsigned p = 2; p <= q; ++p)
    if (is_prime(p) && q % p == 0) {
      unsigned k = 0;
      while (q % p == 0) {
        q /= p;
        ++k;
      }
      if (q != 1)
        return std::nullopt;
      return std::make_pair(p, k);
    }
  return std::nullopt;
}

/// GF(q) with elements encoded as base-p coefficient vectors, built from the first monic
/// polynomial of degree k that yields no zero divisors.
class FiniteField {
public:
  explicit FiniteField(unsigned q) : q_(q) {
    auto pk = prime_power(q);
    if (!pk)
      throw PreconditionError(std::to_string(q) + " is not a prime power");
    p_ = pk->first;
    k_ = pk->second;
    for (unsigned tail = 0; tail < q_; ++tail) {
      build_multiplication(tail);
      if (no_zero_divisors())
        break;
    }
    for (unsigned x = 1; x < q_; ++x)
      for (unsigned y = 1; y < q_; ++y)
        if (mul(x, y) == 1)
          inv_.resize(q_), inv_[x] = y;
    for (unsigned g = 1; g < q_; ++g) {
      unsigned x = g, order = 1;
      while (x != 1) {
        x = mul(x, g);
        ++order;
      }
      if (order == q_ - 1) {
        primitive_ = g;
        break;
      }
    }
  }

  unsigned size() const { return q_; }
  unsigned add(unsigned a, unsigned b) const {
    unsigned r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i, a /= p_, b /= p_, scale *= p_)
      r += (a % p_ + b % p_) % p_ * scale;
    return r;
  }
  unsigned neg(unsigned a) const {
    unsigned r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i, a /= p_, scale *= p_)
      r += (p_ - a % p_) % p_ * scale;
    return r;
  }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned inv(unsigned a) const { return inv_[a]; }
  unsigned primitive() const { return primitive_ ? primitive_ : 1; }

private:
  /// Multiplication modulo x^k + (polynomial encoded by `tail`).
  void build_multiplication(unsigned tail) {
    auto digits = [&](unsigned a) {
      std::vector<unsigned> d(k_);
      for (unsigned i = 0; i < k_; ++i, a /= p_)
        d[i] = a % p_;
      return d;
    };
    const auto low = digits(tail);
    mul_.assign(q_ * q_, 0);
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b < q_; ++b) {
        const auto da = digits(a), db = digits(b);
        std::vector<unsigned> prod(2 * k_, 0);
        for (unsigned i = 0; i < k_; ++i)
          for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        // Reduce using x^k = -low(x).
        for (unsigned d = 2 * k_ - 1; d >= k_; --d) {
          const unsigned c = prod[d];
          prod[d] = 0;
          for (unsigned i = 0; i < k_; ++i)
            prod[d - k_ + i] = (prod[d - k_ + i] + c * (p_ - low[i])) % p_;
        }
        unsigned r = 0, scale = 1;
        for (unsigned i = 0; i < k_; ++i, scale *= p_)
          r += prod[i] * scale;
        mul_[a * q_ + b] = r;
      }
  }

  bool no_zero_divisors() const {
    for (unsigned a = 1; a < q_; ++a)
      for (unsigned b = 1; b < q_; ++b)
        if (mul(a, b) == 0)
          return false;
    return true;
  }

  unsigned q_, p_ = 0, k_ = 0, primitive_ = 0;
  std::vector<unsigned> mul_, inv_;
};

Permutation cycle_of(std::size_t n, std::size_t first, std::size_t last) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = first; i < last; ++i)
    img[i] = static_cast<Point>(i + 1);
  img[last] = static_cast<Point>(first);
  return Permutation(std::move(img));
}

Permutation transposition(std::size_t n, Point a, Point b) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::swap(img[a], img[b]);
  return Permutation(std::move(img));
}

/// Moebius map on 0..q-1 plus infinity at index q.
template <class F>
Permutation projective_map(unsigned q, F f) {
  std::vector<Point> img(q + 1);
  for (unsigned x = 0; x <= q; ++x)
    img[x] = static_cast<Point>(f(x));
  return Permutation(std::move(img));
}

void check_param(Family f, unsigned param) {
  auto bad = [&](const std::string &why) {
    throw PreconditionError(to_string(f) + " " + std::to_string(param) + ": " + why);
  };
  switch (f) {
  case Family::symmetric:
  case Family::cyclic:
    if (param < 1)
      bad("degree must be at least 1");
    break;
  case Family::alternating:
  case Family::dihedral:
    if (param < 3)
      bad("degree must be at least 3");
    break;
  case Family::pgl2:
  case Family::psl2:
    if (param < 3 || param > 31 || !prime_power(param))
      bad("q must be a prime power between 3 and 31");
    break;
  case Family::mathieu:
    if (param != 11 && param != 12 && param != 23 && param != 24)
      bad("Mathieu degree must be 11, 12, 23 or 24");
    break;
  }
}

std::vector<Permutation> parse_all(std::span<const std::string_view> cycles, std::size_t n) {
  std::vector<Permutation> out;
  for (auto c : cycles)
    out.push_back(parse_cycles(c, n));
  return out;
}

GeneratorSet raw_generators(Family f, unsigned param) {
  check_param(f, param);
  const std::size_t n = param;
  std::vector<Permutation> gens;
  switch (f) {
  case Family::symmetric:
    if (n >= 2) {
      gens.push_back(transposition(n, 0, 1));
      gens.push_back(cycle_of(n, 0, n - 1));
    }
    break;
  case Family::alternating:
    for (std::size_t i = 2; i < n; ++i) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      img[0] = 1;
      img[1] = static_cast<Point>(i);
      img[i] = 0;
      gens.emplace_back(std::move(img));
    }
    break;
  case Family::cyclic:
    if (n >= 2)
      gens.push_back(cycle_of(n, 0, n - 1));
    break;
  case Family::dihedral: {
    gens.push_back(cycle_of(n, 0, n - 1));
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = static_cast<Point>((n - i) % n);
    gens.emplace_back(std::move(img));
    break;
  }
  case Family::pgl2:
  case Family::psl2: {
    const unsigned q = param, inf = q;
    const FiniteField field(q);
    const unsigned g = field.primitive();
    const bool special = f == Family::psl2;
    const unsigned mult = special ? field.mul(g, g) : g;
    gens.push_back(projective_map(q, [&](unsigned x) { return x == inf ? inf : field.add(x, 1); }));
    gens.push_back(projective_map(q, [&](unsigned x) { return x == inf ? inf : field.mul(x, mult); }));
    // x -> 1/x for PGL, x -> -1/x for PSL; 0 and infinity swap.
    gens.push_back(projective_map(q, [&](unsigned x) {
      if (x == inf)
        return 0u;
      if (x == 0)
        return inf;
      const unsigned y = field.inv(x);
      return special ? field.neg(y) : y;
    }));
    return GeneratorSet(q + 1, std::move(gens), catalog_label(f, param));
  }
  case Family::mathieu: {
    std::span<const std::string_view> src = param == 11   ? std::span<const std::string_view>(kM11)
                                            : param == 12 ? std::span<const std::string_view>(kM12)
                                            : param == 23 ? std::span<const std::string_view>(kM23)
                                                          : std::span<const std::string_view>(kM24);
    gens = parse_all(src, n);
    break;
  }
  }
  return GeneratorSet(n, std::move(gens), catalog_label(f, param));
}

} // namespace

Family parse_family(std::string_view name) {
  if (name == "symmetric")
    return Family::symmetric;
  if (name == "alternating")
    return Family::alternating;
  if (name == "cyclic")
    return Family::cyclic;
  if (name == "dihedral")
    return Family::dihedral;
  if (name == "pgl2")
    return Family::pgl2;
  if (name == "psl2")
    return Family::psl2;
  if (name == "mathieu")
    return Family::mathieu;
  throw PreconditionError("unknown group family '" + std::string(name) + "'");
}

std::string to_string(Family f) {
  switch (f) {
  case Family::symmetric:
    return "symmetric";
  case Family::alternating:
    return "alternating";
  case Family::cyclic:
    return "cyclic";
  case Family::dihedral:
    return "dihedral";
  case Family::pgl2:
    return "pgl2";
  case Family::psl2:
    return "psl2";
  case Family::mathieu:
    return "mathieu";
  }
  return "?";
}

std::string catalog_label(Family f, unsigned param) {
  const std::string p = std::to_string(param);
  switch (f) {
  case Family::symmetric:
    return "S" + p;
  case Family::alternating:
    return "A" + p;
  case Family::cyclic:
    return "C" + p;
  case Family::dihedral:
    return "D" + p;
  case Family::pgl2:
    return "PGL2_" + p;
  case Family::psl2:
    return "PSL2_" + p;
  case Family::mathieu:
    return "M" + p;
  }
  return p;
}

BuiltinMetadata builtin_metadata(Family f, unsigned param) {
  check_param(f, param);
  const std::size_t n = param;
  const Integer q = param;
  switch (f) {
  case Family::symmetric:
    return {n, factorial(param), n};
  case Family::alternating:
    return {n, factorial(param) / 2, n - 2};
  case Family::cyclic:
    return {n, Integer(n), n == 2 ? 2u : 1u};
  case Family::dihedral:
    return {n, Integer(2 * n), n == 3 ? 3u : 1u};
  case Family::pgl2:
    // PGL(2,3) is Sym(4).
    return {n + 1, q * (q * q - 1), param == 3 ? 4u : 3u};
  case Family::psl2:
    // PSL = PGL in characteristic 2.
    if (param % 2 == 0)
      return {n + 1, q * (q * q - 1), 3};
    return {n + 1, q * (q * q - 1) / 2, 2};
  case Family::mathieu:
    switch (param) {
    case 11:
      return {11, 7920, 4};
    case 12:
      return {12, 95040, 5};
    case 23:
      return {23, 10200960, 4};
    default:
      return {24, 244823040, 5};
    }
  }
  throw PreconditionError("unknown family");
}

Group load_builtin(Family f, unsigned param) {
  BuiltinMetadata meta = builtin_metadata(f, param);
  Group g(raw_generators(f, param));
  std::size_t t = g.transitivity_degree();
  if (g.degree() != meta.degree || g.order() != meta.order || t != meta.transitivity)
    throw Error("builtin " + g.label() + " failed validation: degree " +
                std::to_string(g.degree()) + ", order " + g.order().str() + ", t " +
                std::to_string(t) + "; expected " + std::to_string(meta.degree) + ", " +
                meta.order.str() + ", " + std::to_string(meta.transitivity));
  return g;
}

GeneratorSet builtin(Family f, unsigned param) { return load_builtin(f, param).generators(); }

Group load_builtin(std::string_view label) {
  static const std::regex simple(R"(^(S|A|C|D)(\d+)$)");
  static const std::regex proj(R"(^(PGL|PSL)(?:2_|\(2,)(\d+)\)?$)");
  static const std::regex mathieu(R"(^M(\d+)$)");
  const std::string s(label);
  std::smatch m;
  auto number = [](const std::string &digits) {
    if (digits.size() > 6)
      throw PreconditionError("parameter too large: " + digits);
    return static_cast<unsigned>(std::stoul(digits));
  };
  if (std::regex_match(s, m, simple)) {
    const char c = m[1].str()[0];
    Family f = c == 'S'   ? Family::symmetric
               : c == 'A' ? Family::alternating
               : c == 'C' ? Family::cyclic
                          : Family::dihedral;
    return load_builtin(f, number(m[2].str()));
  }
  if (std::regex_match(s, m, proj))
    return load_builtin(m[1].str() == "PGL" ? Family::pgl2 : Family::psl2, number(m[2].str()));
  if (std::regex_match(s, m, mathieu))
    return load_builtin(Family::mathieu, number(m[1].str()));
  throw PreconditionError("unknown catalog group '" + s + "'");
}

std::vector<std::string> catalog_labels(const Integer &max_order) {
  std::vector<std::string> out;
  for (unsigned n = 2; factorial(n) <= max_order; ++n)
    out.push_back(catalog_label(Family::symmetric, n));
  for (unsigned n = 3; factorial(n) / 2 <= max_order; ++n)
    out.push_back(catalog_label(Family::alternating, n));
  for (unsigned n = 2; n <= 16 && n <= max_order; ++n)
    out.push_back(catalog_label(Family::cyclic, n));
  for (unsigned n = 3; n <= 16 && 2 * n <= max_order; ++n)
    out.push_back(catalog_label(Family::dihedral, n));
  for (Family f : {Family::pgl2, Family::psl2})
    for (unsigned q = 3; q <= 31; ++q)
      if (prime_power(q) && builtin_metadata(f, q).order <= max_order)
        out.push_back(catalog_label(f, q));
  for (unsigned k : {11u, 12u, 23u, 24u})
    if (builtin_metadata(Family::mathieu, k).order <= max_order)
      out.push_back(catalog_label(Family::mathieu, k));
  return out;
}

// ------------------------------------------------------------- .perm files

GeneratorSet parse_generator_text(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  auto fail = [&](const std::string &why) {
    throw ParseError("line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) {
      std::string_view comment = body.substr(hash + 1);
      if (label.empty() && comment.starts_with(" label: "))
        label = std::string(comment.substr(8));
      body = body.substr(0, hash);
    }
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
      body.remove_suffix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
      body.remove_prefix(1);
    if (body.empty())
      continue;
    for (char c : body)
      if (static_cast<unsigned char>(c) > 127)
        fail("non-ASCII character");
    if (!degree) {
      static const std::regex header(R"(^degree\s+(\d+)$)");
      std::cmatch m;
      if (!std::regex_match(body.begin(), body.end(), m, header))
        fail("expected 'degree <n>' header");
      if (m[1].length() > 9)
        fail("degree too large");
      degree = std::stoul(m[1].str());
      if (*degree < 1)
        fail("degree must be at least 1");
      continue;
    }
    try {
      gens.push_back(parse_cycles(body, *degree));
    } catch (const ParseError &e) {
      fail(e.what());
    }
  }
  if (!degree)
    throw ParseError("line " + std::to_string(std::max<std::size_t>(line_no, 1)) +
                     ": missing 'degree <n>' header");
  return GeneratorSet(*degree, std::move(gens), std::move(label));
}

std::string format_generator_text(const GeneratorSet &gens) {
  std::ostringstream os;
  if (!gens.label.empty())
    os << "# label: " << gens.label << '\n';
  os << "degree " << gens.degree << '\n';
  for (const auto &g : gens.generators)
    os << format_cycles(g) << '\n';
  return os.str();
}

GeneratorSet load_generator_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  GeneratorSet gens = parse_generator_text(buf.str());
  if (gens.label.empty())
    gens.label = path.stem().string();
  return gens;
}

void save_generator_file(const GeneratorSet &gens, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write " + path.string());
  out << format_generator_text(gens);
  if (!out)
    throw Error("write failed for " + path.string());
}

Group resolve_group_spec(std::string_view spec) {
  if (spec.starts_with("catalog:"))
    return load_builtin(spec.substr(8));
  if (spec.starts_with("file:"))
    return Group(load_generator_file(std::filesystem::path(std::string(spec.substr(5)))));
  throw PreconditionError("group spec must be catalog:<name> or file:<path>, got '" +
                          std::string(spec) + "'");
}

} // namespace bochert
