#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pairlab {

using Element = std::uint64_t;
using Assignment = std::vector<Element>;

// Cyclic group Z_M. Elements are stored as uint64; M is capped at 2^62 so
// that all modular arithmetic stays exact with 128-bit intermediates.
struct GroupSpec {
  std::uint64_t modulus;

  explicit GroupSpec(std::uint64_t m);

  bool contains(Element x) const { return x < modulus; }
};

enum class OpKind { Difference, Sum, Affine };

// Pairwise relation a ⊖ b = (alpha*a + beta*b) mod M. Difference and Sum
// keep their own tags; Affine carries explicit coefficients.
struct RelationOp {
  OpKind kind = OpKind::Difference;
  std::uint64_t a = 0;  // Affine only
  std::uint64_t b = 0;

  static RelationOp difference() { return {OpKind::Difference, 0, 0}; }
  static RelationOp sum() { return {OpKind::Sum, 0, 0}; }
  static RelationOp affine(std::uint64_t a, std::uint64_t b) {
    return {OpKind::Affine, a, b};
  }

  // Coefficients (alpha, beta) reduced mod M.
  std::pair<std::uint64_t, std::uint64_t> coeffs(const GroupSpec& g) const;

  // Serialization tag: "diff" | "sum" | "affine:a:b"
  std::string tag(const GroupSpec& g) const;
  static RelationOp parse_tag(const std::string& tag);
};

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m);
std::uint64_t gcd_u64(std::uint64_t x, std::uint64_t y);
// Modular inverse; requires gcd(x, m) = 1.
std::uint64_t inv_mod(std::uint64_t x, std::uint64_t m);

// Both cancellation axioms hold iff both coefficients are coprime to M.
bool validate_op(const RelationOp& op, const GroupSpec& g);

Element op_apply(const RelationOp& op, const GroupSpec& g, Element x,
                 Element y);

// Full n x n matrix [x_i ⊖ x_j], row-major.
std::vector<Element> relation_matrix(std::span<const Element> x,
                                     const RelationOp& op, const GroupSpec& g);

}  // namespace pairlab
