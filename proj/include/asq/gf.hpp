/*
   Copyright 2026 the asq authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
*/

// Finite field tower F_p c F_q = F_{p^t} c F_{q^n}, realized as the single
// extension F_p[z]/(modulus) of degree t*n. The modulus is the first monic
// irreducible of its degree in the ascending base-p coefficient scan, so a
// given (p, t, n) always yields the same representation. The q-power
// Frobenius and the relative trace are precomputed F_p-matrices.

#pragma once

#include <cstdint>
#include <iterator>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace asq {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// A computation would exceed a configured size ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters violate a construction's arithmetic hypotheses.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Default cap on full-field enumeration (elements).
inline constexpr u64 kDefaultEnumCeiling = u64{1} << 26;
// Default cap for the affine-pair counting oracle (elements, not pairs).
inline constexpr u64 kDefaultPairOracleCeiling = u64{1} << 14;
// Absolute cap on field size so encodings and counts fit in 64-bit integers.
inline constexpr u64 kHardFieldCap = u64{1} << 62;

u64 checked_mul_u64(u64 a, u64 b, const char* what);
u64 checked_pow_u64(u64 base, unsigned exp, const char* what);

class FieldCtx;
using FieldRef = std::shared_ptr<const FieldCtx>;

// One member of F_{q^n}: t*n residues mod p, little-endian in the modulus
// root. enc() is the canonical base-p integer encoding.
struct Element {
  FieldRef ctx;
  std::vector<int> c;

  bool is_zero() const;
  u64 enc() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator-() const;
  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }
};

Element inv(const Element& x);
Element pow(const Element& x, i64 e);
// x^{q^j}; j is reduced mod n (negative j allowed).
Element frobenius(const Element& x, int j);
// Tr_{F_{q^n}/F_q}(x); the result lies in F_q.
Element trace(const Element& x);
// True iff x lies in F_{q^d}, i.e. x^{q^d} = x. Requires d | n.
bool is_in_subfield(const Element& x, int d);

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  int p() const { return p_; }
  int t() const { return t_; }
  int n() const { return n_; }
  int deg() const { return d_; }  // t*n
  u64 q() const { return q_; }    // p^t
  u64 size() const { return size_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Element zero() const;
  Element one() const;
  // Embeds an integer into the prime subfield.
  Element from_int(i64 v) const;
  Element from_enc(u64 enc) const;

  bool compatible(const FieldCtx& o) const;

  // Low-level kernels over raw coefficient buffers of length deg().
  // They carry no Element overhead and are safe to call concurrently.
  void vadd(const int* a, const int* b, int* out) const;
  void vsub(const int* a, const int* b, int* out) const;
  // out = a*b mod modulus; scratch must hold 2*deg()-1 ints. out != a,b.
  void vmul(const int* a, const int* b, int* out, int* scratch) const;
  // out = M*in for a deg() x deg() row-major matrix. out != in.
  void vapply(const std::vector<int>& mat, const int* in, int* out) const;
  bool vis_zero(const int* a) const;
  u64 venc(const int* a) const;
  void vdec(u64 enc, int* out) const;

  // Matrix of x -> x^{q^j} (j reduced mod n) and of the trace map.
  const std::vector<int>& frob_matrix(int j) const;
  const std::vector<int>& trace_matrix() const;

  friend FieldRef field_create(int p, int t, int n, u64 ceiling);

 private:
  FieldCtx() = default;

  int p_ = 0, t_ = 0, n_ = 0, d_ = 0;
  u64 q_ = 0, size_ = 0;
  std::vector<int> modulus_;
  // reduction_[k] = z^{deg+k} mod modulus, k = 0..deg-2.
  std::vector<std::vector<int>> reduction_;
  std::vector<std::vector<int>> frob_pow_;  // n matrices, frob_pow_[j]: x -> x^{q^j}
  std::vector<int> trace_mat_;
};

// Deterministic construction; throws ResourceLimitError when p^{tn} exceeds
// the ceiling (pass a larger ceiling to override, up to the hard cap).
FieldRef field_create(int p, int t, int n, u64 ceiling = kDefaultEnumCeiling);

// Ascending-encoding range over all field elements.
class EnumRange {
 public:
  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(FieldRef ctx, u64 i) : ctx_(std::move(ctx)), i_(i) {}
    Element operator*() const { return ctx_->from_enc(i_); }
    iterator& operator++() { ++i_; return *this; }
    bool operator!=(const iterator& o) const { return i_ != o.i_; }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    FieldRef ctx_;
    u64 i_;
  };

  explicit EnumRange(FieldRef ctx) : ctx_(std::move(ctx)) {}
  iterator begin() const { return iterator(ctx_, 0); }
  iterator end() const { return iterator(ctx_, ctx_->size()); }
  u64 count() const { return ctx_->size(); }

 private:
  FieldRef ctx_;
};

EnumRange enumerate(const FieldRef& ctx, u64 ceiling = kDefaultEnumCeiling);

}  // namespace asq
