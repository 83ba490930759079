#include "pairlab/group.hpp"

#include <sstream>
#include <stdexcept>

namespace pairlab {

namespace {
constexpr std::uint64_t kMaxModulus = 1ull << 62;
}

GroupSpec::GroupSpec(std::uint64_t m) : modulus(m) {
  if (m < 2) throw std::invalid_argument("GroupSpec: modulus must be >= 2");
  if (m > kMaxModulus)
    throw std::invalid_argument("GroupSpec: modulus must be <= 2^62");
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t gcd_u64(std::uint64_t x, std::uint64_t y) {
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return x;
}

std::uint64_t inv_mod(std::uint64_t x, std::uint64_t m) {
  // extended Euclid on (x, m); signed 128-bit keeps coefficients exact
  __int128 r0 = x % m, r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::invalid_argument("inv_mod: not coprime");
  __int128 res = s0 % static_cast<__int128>(m);
  if (res < 0) res += m;
  return static_cast<std::uint64_t>(res);
}

std::pair<std::uint64_t, std::uint64_t> RelationOp::coeffs(
    const GroupSpec& g) const {
  const std::uint64_t m = g.modulus;
  switch (kind) {
    case OpKind::Difference:
      return {1, m - 1};
    case OpKind::Sum:
      return {1, 1};
    case OpKind::Affine:
      return {a % m, b % m};
  }
  throw std::logic_error("RelationOp: bad kind");
}

std::string RelationOp::tag(const GroupSpec& g) const {
  switch (kind) {
    case OpKind::Difference:
      return "diff";
    case OpKind::Sum:
      return "sum";
    case OpKind::Affine: {
      auto [al, be] = coeffs(g);
      std::ostringstream os;
      os << "affine:" << al << ":" << be;
      return os.str();
    }
  }
  throw std::logic_error("RelationOp: bad kind");
}

RelationOp RelationOp::parse_tag(const std::string& tag) {
  if (tag == "diff") return difference();
  if (tag == "sum") return sum();
  if (tag.rfind("affine:", 0) == 0) {
    std::istringstream is(tag.substr(7));
    std::uint64_t a, b;
    char colon;
    if (is >> a >> colon >> b && colon == ':') return affine(a, b);
  }
  throw std::invalid_argument("RelationOp: unrecognized tag '" + tag + "'");
}

bool validate_op(const RelationOp& op, const GroupSpec& g) {
  auto [al, be] = op.coeffs(g);
  return gcd_u64(al, g.modulus) == 1 && gcd_u64(be, g.modulus) == 1;
}

Element op_apply(const RelationOp& op, const GroupSpec& g, Element x,
                 Element y) {
  if (!g.contains(x) || !g.contains(y))
    throw std::out_of_range("op_apply: element out of range");
  auto [al, be] = op.coeffs(g);
  const std::uint64_t m = g.modulus;
  std::uint64_t r = mul_mod(al, x, m) + mul_mod(be, y, m);
  if (r >= m) r -= m;  // both terms < m, sum < 2m < 2^63
  return r;
}

std::vector<Element> relation_matrix(std::span<const Element> x,
                                     const RelationOp& op,
                                     const GroupSpec& g) {
  const std::size_t n = x.size();
  std::vector<Element> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i * n + j] = op_apply(op, g, x[i], x[j]);
  return out;
}

}  // namespace pairlab
