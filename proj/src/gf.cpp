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

#include "asq/gf.hpp"

#include <algorithm>
#include <cassert>

namespace asq {

u64 checked_mul_u64(u64 a, u64 b, const char* what) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r) || r >= kHardFieldCap)
    throw ResourceLimitError(std::string(what) + ": value exceeds the 2^62 integer cap");
  return r;
}

u64 checked_pow_u64(u64 base, unsigned exp, const char* what) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul_u64(r, base, what);
  return r;
}

namespace {

// Dense little-endian polynomials over F_p, used only during construction.
using Poly = std::vector<int>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pinv_mod(int a, int p) {
  // Fermat inverse; p is prime and a != 0 mod p.
  int r = 1;
  long long b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = static_cast<int>(r * b % p);
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly pmul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
  }
  ptrim(r);
  return r;
}

Poly pmod(Poly a, const Poly& f, int p) {
  ptrim(a);
  const int df = static_cast<int>(f.size()) - 1;
  const int lead_inv = pinv_mod(f.back(), p);
  while (static_cast<int>(a.size()) - 1 >= df) {
    const int c = static_cast<int>(static_cast<long long>(a.back()) * lead_inv % p);
    const size_t shift = a.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i)
      a[shift + i] = static_cast<int>(((a[shift + i] - static_cast<long long>(c) * f[i]) % p + p) % p);
    ptrim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly ppowmod(const Poly& a, u64 e, const Poly& f, int p) {
  Poly r = {1};
  Poly b = pmod(a, f, p);
  while (e > 0) {
    if (e & 1) r = pmod(pmul(r, b, p), f, p);
    b = pmod(pmul(b, b, p), f, p);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, int p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<int> prime_factors(int d) {
  std::vector<int> out;
  for (int f = 2; f * f <= d; ++f) {
    if (d % f == 0) {
      out.push_back(f);
      while (d % f == 0) d /= f;
    }
  }
  if (d > 1) out.push_back(d);
  return out;
}

// f monic of degree d over F_p. Irreducible iff x^{p^d} = x mod f and for
// every prime l | d the polynomial x^{p^{d/l}} - x is coprime to f.
bool is_irreducible(const Poly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d == 1) return true;
  const Poly x = {0, 1};
  Poly u = x;
  for (int i = 0; i < d; ++i) u = ppowmod(u, static_cast<u64>(p), f, p);
  if (u != x) return false;
  for (int l : prime_factors(d)) {
    Poly v = x;
    for (int i = 0; i < d / l; ++i) v = ppowmod(v, static_cast<u64>(p), f, p);
    // w = v - x; w = 0 means every factor of f has degree dividing d/l.
    Poly w = v;
    if (w.size() < 2) w.resize(2, 0);
    w[1] = ((w[1] - 1) % p + p) % p;
    ptrim(w);
    if (w.empty()) return false;
    if (static_cast<int>(pgcd(w, f, p).size()) - 1 > 0) return false;
  }
  return true;
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int f = 3; static_cast<long long>(f) * f <= p; f += 2)
    if (p % f == 0) return false;
  return true;
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

bool Element::is_zero() const {
  for (int v : c)
    if (v != 0) return false;
  return true;
}

u64 Element::enc() const { return ctx->venc(c.data()); }

Element Element::operator+(const Element& o) const {
  require(ctx->compatible(*o.ctx), "element context mismatch");
  Element r{ctx, std::vector<int>(c.size())};
  ctx->vadd(c.data(), o.c.data(), r.c.data());
  return r;
}

Element Element::operator-(const Element& o) const {
  require(ctx->compatible(*o.ctx), "element context mismatch");
  Element r{ctx, std::vector<int>(c.size())};
  ctx->vsub(c.data(), o.c.data(), r.c.data());
  return r;
}

Element Element::operator*(const Element& o) const {
  require(ctx->compatible(*o.ctx), "element context mismatch");
  Element r{ctx, std::vector<int>(c.size())};
  std::vector<int> scratch(2 * c.size());
  ctx->vmul(c.data(), o.c.data(), r.c.data(), scratch.data());
  return r;
}

Element Element::operator-() const {
  const int p = ctx->p();
  Element r{ctx, c};
  for (int& v : r.c) v = (p - v) % p;
  return r;
}

bool Element::operator==(const Element& o) const {
  return ctx->compatible(*o.ctx) && c == o.c;
}

Element inv(const Element& x) {
  require(!x.is_zero(), "inverse of zero");
  // Extended Euclid in F_p[z] against the modulus.
  const auto& ctx = *x.ctx;
  const int p = ctx.p();
  Poly a(x.c);
  ptrim(a);
  Poly b(ctx.modulus());
  Poly s0 = {1}, s1 = {};
  while (!b.empty()) {
    // a = qb + r
    Poly q;
    {
      Poly r = a;
      ptrim(r);
      const int db = static_cast<int>(b.size()) - 1;
      const int lead_inv = pinv_mod(b.back(), p);
      q.assign(std::max<int>(static_cast<int>(r.size()) - db, 1), 0);
      while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        const int c = static_cast<int>(static_cast<long long>(r.back()) * lead_inv % p);
        const size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
          r[shift + i] = static_cast<int>(((r[shift + i] - static_cast<long long>(c) * b[i]) % p + p) % p);
        ptrim(r);
      }
      ptrim(q);
      a = std::move(b);
      b = std::move(r);
    }
    // (s0, s1) <- (s1, s0 - q*s1)
    Poly qs1 = pmul(q, s1, p);
    Poly ns(std::max(s0.size(), qs1.size()), 0);
    for (size_t i = 0; i < ns.size(); ++i) {
      const int u = i < s0.size() ? s0[i] : 0;
      const int v = i < qs1.size() ? qs1[i] : 0;
      ns[i] = ((u - v) % p + p) % p;
    }
    ptrim(ns);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  // a = gcd = nonzero constant; result = s0 / a.
  assert(a.size() == 1);
  const int scale = pinv_mod(a[0], p);
  Element r{x.ctx, std::vector<int>(ctx.deg(), 0)};
  for (size_t i = 0; i < s0.size(); ++i)
    r.c[i] = static_cast<int>(static_cast<long long>(s0[i]) * scale % p);
  return r;
}

Element pow(const Element& x, i64 e) {
  if (e < 0) return pow(inv(x), -e);
  Element r = x.ctx->one();
  Element b = x;
  u64 ue = static_cast<u64>(e);
  while (ue > 0) {
    if (ue & 1) r = r * b;
    b = b * b;
    ue >>= 1;
  }
  return r;
}

Element frobenius(const Element& x, int j) {
  const auto& ctx = *x.ctx;
  Element r{x.ctx, std::vector<int>(ctx.deg())};
  ctx.vapply(ctx.frob_matrix(j), x.c.data(), r.c.data());
  return r;
}

Element trace(const Element& x) {
  const auto& ctx = *x.ctx;
  Element r{x.ctx, std::vector<int>(ctx.deg())};
  ctx.vapply(ctx.trace_matrix(), x.c.data(), r.c.data());
  return r;
}

bool is_in_subfield(const Element& x, int d) {
  const auto& ctx = *x.ctx;
  require(d >= 1 && ctx.n() % d == 0, "subfield degree must divide n");
  return frobenius(x, d) == x;
}

Element FieldCtx::zero() const {
  return Element{shared_from_this(), std::vector<int>(d_, 0)};
}

Element FieldCtx::one() const { return from_int(1); }

Element FieldCtx::from_int(i64 v) const {
  Element r{shared_from_this(), std::vector<int>(d_, 0)};
  r.c[0] = static_cast<int>(((v % p_) + p_) % p_);
  return r;
}

Element FieldCtx::from_enc(u64 enc) const {
  require(enc < size_, "encoding out of range");
  Element r{shared_from_this(), std::vector<int>(d_, 0)};
  vdec(enc, r.c.data());
  return r;
}

bool FieldCtx::compatible(const FieldCtx& o) const {
  if (this == &o) return true;
  return p_ == o.p_ && t_ == o.t_ && n_ == o.n_ && modulus_ == o.modulus_;
}

void FieldCtx::vadd(const int* a, const int* b, int* out) const {
  for (int i = 0; i < d_; ++i) {
    int s = a[i] + b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

void FieldCtx::vsub(const int* a, const int* b, int* out) const {
  for (int i = 0; i < d_; ++i) {
    int s = a[i] - b[i];
    out[i] = s < 0 ? s + p_ : s;
  }
}

void FieldCtx::vmul(const int* a, const int* b, int* out, int* scratch) const {
  const int len = 2 * d_ - 1;
  long long acc;
  for (int k = 0; k < len; ++k) scratch[k] = 0;
  for (int i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d_; ++j) {
      acc = scratch[i + j] + static_cast<long long>(a[i]) * b[j];
      scratch[i + j] = static_cast<int>(acc % p_);
    }
  }
  // Fold z^{deg+k} via precomputed reduction rows, top down.
  for (int k = len - 1; k >= d_; --k) {
    const int c = scratch[k];
    if (c == 0) continue;
    const auto& row = reduction_[k - d_];
    for (int i = 0; i < d_; ++i)
      scratch[i] = static_cast<int>((scratch[i] + static_cast<long long>(c) * row[i]) % p_);
  }
  for (int i = 0; i < d_; ++i) out[i] = scratch[i];
}

void FieldCtx::vapply(const std::vector<int>& mat, const int* in, int* out) const {
  for (int i = 0; i < d_; ++i) {
    long long acc = 0;
    const int* row = mat.data() + static_cast<size_t>(i) * d_;
    for (int j = 0; j < d_; ++j) acc += static_cast<long long>(row[j]) * in[j];
    out[i] = static_cast<int>(acc % p_);
  }
}

bool FieldCtx::vis_zero(const int* a) const {
  for (int i = 0; i < d_; ++i)
    if (a[i] != 0) return false;
  return true;
}

u64 FieldCtx::venc(const int* a) const {
  u64 e = 0;
  for (int i = d_ - 1; i >= 0; --i) e = e * static_cast<u64>(p_) + static_cast<u64>(a[i]);
  return e;
}

void FieldCtx::vdec(u64 enc, int* out) const {
  for (int i = 0; i < d_; ++i) {
    out[i] = static_cast<int>(enc % static_cast<u64>(p_));
    enc /= static_cast<u64>(p_);
  }
}

const std::vector<int>& FieldCtx::frob_matrix(int j) const {
  int r = j % n_;
  if (r < 0) r += n_;
  return frob_pow_[r];
}

const std::vector<int>& FieldCtx::trace_matrix() const { return trace_mat_; }

FieldRef field_create(int p, int t, int n, u64 ceiling) {
  require(is_odd_prime(p), "p must be an odd prime");
  require(t >= 1 && n >= 1, "t and n must be positive");
  auto ctx_raw = new FieldCtx();
  FieldRef ctx(ctx_raw);
  FieldCtx& f = *ctx_raw;
  f.p_ = p;
  f.t_ = t;
  f.n_ = n;
  f.d_ = t * n;
  f.q_ = checked_pow_u64(static_cast<u64>(p), static_cast<unsigned>(t), "field size");
  f.size_ = checked_pow_u64(static_cast<u64>(p), static_cast<unsigned>(f.d_), "field size");
  if (f.size_ > ceiling)
    throw ResourceLimitError("field of size p^(t*n) exceeds the configured ceiling");

  const int d = f.d_;
  // First monic irreducible of degree d in the ascending coefficient scan.
  Poly mod;
  {
    std::vector<int> digits(d, 0);
    for (;;) {
      Poly cand(digits);
      cand.resize(d + 1, 0);
      cand[d] = 1;
      if (is_irreducible(cand, p)) {
        mod = std::move(cand);
        break;
      }
      int i = 0;
      while (i < d && ++digits[i] == p) digits[i++] = 0;
      if (i == d) throw std::logic_error("no irreducible polynomial found in scan");
    }
  }
  f.modulus_ = mod;

  // reduction_[k] = z^{d+k} mod modulus. z^d = -tail; higher rows by shifting.
  f.reduction_.assign(d > 1 ? d - 1 : 1, std::vector<int>(d, 0));
  {
    std::vector<int> cur(d, 0);
    for (int i = 0; i < d; ++i) cur[i] = (p - mod[i]) % p;
    f.reduction_[0] = cur;
    for (int k = 1; k <= d - 2; ++k) {
      std::vector<int> nxt(d, 0);
      const int top = cur[d - 1];
      for (int i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
      nxt[0] = 0;
      if (top != 0)
        for (int i = 0; i < d; ++i)
          nxt[i] = static_cast<int>((nxt[i] + static_cast<long long>(top) * f.reduction_[0][i]) % p);
      f.reduction_[k] = nxt;
      cur = std::move(nxt);
    }
  }

  // zq = z^q mod modulus, then the Frobenius matrix column by column.
  Poly zq = {0, 1};
  for (int i = 0; i < t; ++i) zq = ppowmod(zq, static_cast<u64>(p), mod, p);
  std::vector<int> M(static_cast<size_t>(d) * d, 0);
  {
    Poly col = {1};
    for (int j = 0; j < d; ++j) {
      for (size_t i = 0; i < col.size(); ++i) M[i * d + j] = col[i];
      col = pmod(pmul(col, zq, p), mod, p);
    }
  }
  f.frob_pow_.resize(n);
  f.frob_pow_[0].assign(static_cast<size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) f.frob_pow_[0][static_cast<size_t>(i) * d + i] = 1;
  if (n > 1) f.frob_pow_[1] = M;
  for (int j = 2; j < n; ++j) {
    std::vector<int> R(static_cast<size_t>(d) * d, 0);
    const auto& A = f.frob_pow_[j - 1];
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        const int a = M[static_cast<size_t>(i) * d + k];
        if (a == 0) continue;
        for (int c2 = 0; c2 < d; ++c2)
          R[static_cast<size_t>(i) * d + c2] = static_cast<int>(
              (R[static_cast<size_t>(i) * d + c2] +
               static_cast<long long>(a) * A[static_cast<size_t>(k) * d + c2]) %
              p);
      }
    f.frob_pow_[j] = std::move(R);
  }
  f.trace_mat_.assign(static_cast<size_t>(d) * d, 0);
  for (int j = 0; j < n; ++j)
    for (size_t i = 0; i < f.trace_mat_.size(); ++i)
      f.trace_mat_[i] = (f.trace_mat_[i] + f.frob_pow_[j][i]) % p;

  // Sanity: applying the q-Frobenius n times is the identity on z.
  {
    std::vector<int> v(d, 0), w(d, 0);
    if (d > 1)
      v[1] = 1;
    else
      v[0] = 1;
    for (int j = 0; j < n; ++j) {
      f.vapply(M, v.data(), w.data());
      std::swap(v, w);
    }
    std::vector<int> z0(d, 0);
    if (d > 1)
      z0[1] = 1;
    else
      z0[0] = 1;
    if (v != z0) throw std::logic_error("Frobenius period check failed");
  }
  return ctx;
}

EnumRange enumerate(const FieldRef& ctx, u64 ceiling) {
  if (ctx->size() > ceiling)
    throw ResourceLimitError("field too large to enumerate under the configured ceiling");
  return EnumRange(ctx);
}

}  // namespace asq
