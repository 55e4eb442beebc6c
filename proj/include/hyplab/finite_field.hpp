#ifndef HYPLAB_FINITE_FIELD_HPP
#define HYPLAB_FINITE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hyplab/numbers.hpp"

namespace hyplab {

// F_{p^d} as Z/p[x] mod a monic irreducible polynomial. Elements are indices
// in [0, p^d): index sum(c_i p^i) encodes the coordinate vector (c_0..c_{d-1}),
// c_0 the constant coefficient. Enumeration order is index order, so the
// first p elements are the prime-field constants 0, 1, ..., p-1.
//
// Descriptors are immutable after construction and safe to share across
// threads. Lookup tables for small fields are built eagerly.
class Fq {
 public:
  using elem = std::uint32_t;

  int p() const { return p_; }
  int degree() const { return degree_; }
  std::uint64_t size() const { return size_; }
  const std::vector<int>& modulus() const { return modulus_; }

  elem zero() const { return 0; }
  elem one() const { return p_ > 1 ? 1 : 0; }
  elem from_int(long v) const {
    long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<elem>(r);
  }

  elem add(elem a, elem b) const;
  elem sub(elem a, elem b) const;
  elem neg(elem a) const;
  elem mul(elem a, elem b) const;
  elem inv(elem a) const;  // a != 0
  elem pow(elem a, std::int64_t e) const;
  elem frobenius(elem a) const { return pow(a, p_); }

  // Tr_{F_{p^d}/F_p} as an integer in [0, p).
  int trace_to_prime(elem a) const;

  std::vector<int> coords(elem a) const;
  elem from_coords(const std::vector<int>& c) const;

  std::uint64_t multiplicative_order(elem a) const;  // a != 0

  // Registry construction; see field_make below.
  Fq(int p, int degree, std::vector<int> modulus);

 private:
  int p_, degree_;
  std::uint64_t size_;
  std::vector<int> modulus_;
  std::vector<elem> mul_table_;      // size_*size_ when small enough
  std::vector<std::int32_t> trace_table_;
  std::vector<elem> inv_table_;

  elem mul_generic(elem a, elem b) const;
  int trace_generic(elem a) const;
};

struct FieldElement {
  const Fq* field = nullptr;
  Fq::elem idx = 0;

  bool operator==(const FieldElement&) const = default;
  std::vector<int> coords() const { return field->coords(idx); }
};

// Global cap on constructible field sizes (number of elements).
void set_field_size_cap(std::uint64_t cap);
std::uint64_t field_size_cap();

// Returns the interned descriptor of F_{p^degree}. Without an explicit
// polynomial the lexicographically least monic irreducible of that degree is
// chosen (coefficients compared from the leading one down), so towers are
// reproducible across runs. Throws NotPrime / Reducible / CapExceeded.
const Fq* field_make(int p, int degree,
                     std::optional<std::vector<int>> polynomial = std::nullopt);

// Relative trace onto a subfield (degree divides); throws NotASubfield.
FieldElement field_trace(FieldElement x, const Fq* target);

// Embedding of a subfield into an extension, computed once per pair by
// root-finding of the subfield's defining polynomial (least root in
// enumeration order).
Fq::elem embed(const Fq* from, const Fq* to, Fq::elem a);

std::vector<FieldElement> field_enumerate(const Fq* f);

bool poly_is_irreducible(int p, const std::vector<int>& f);

}  // namespace hyplab

#endif
