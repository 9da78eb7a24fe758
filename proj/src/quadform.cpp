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

#include "asq/quadform.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "asq/upoly.hpp"

namespace asq {

namespace {

// Row-major matrix of multiplication by c: column j is c * z^j.
std::vector<int> mul_matrix(const FieldCtx& F, const std::vector<int>& cvec) {
  const int d = F.deg();
  std::vector<int> M(static_cast<size_t>(d) * d, 0);
  std::vector<int> basis(d, 0), col(d, 0), scratch(2 * d);
  for (int j = 0; j < d; ++j) {
    std::fill(basis.begin(), basis.end(), 0);
    basis[j] = 1;
    F.vmul(cvec.data(), basis.data(), col.data(), scratch.data());
    for (int i = 0; i < d; ++i) M[static_cast<size_t>(i) * d + j] = col[i];
    basis[j] = 0;
  }
  return M;
}

int imod_inv(int a, int p) {
  // p is an odd prime and a is nonzero mod p.
  long long r = 1, b = ((a % p) + p) % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<int>(r);
}

int mat_rank(std::vector<int> M, int dim, int p) {
  int rank = 0;
  for (int c = 0; c < dim && rank < dim; ++c) {
    int piv = -1;
    for (int i = rank; i < dim; ++i)
      if (M[static_cast<size_t>(i) * dim + c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < dim; ++j)
        std::swap(M[static_cast<size_t>(piv) * dim + j], M[static_cast<size_t>(rank) * dim + j]);
    const long long inv = imod_inv(M[static_cast<size_t>(rank) * dim + c], p);
    for (int j = 0; j < dim; ++j)
      M[static_cast<size_t>(rank) * dim + j] =
          static_cast<int>(M[static_cast<size_t>(rank) * dim + j] * inv % p);
    for (int i = rank + 1; i < dim; ++i) {
      const long long f = M[static_cast<size_t>(i) * dim + c];
      if (f == 0) continue;
      for (int j = 0; j < dim; ++j) {
        long long v = M[static_cast<size_t>(i) * dim + j] -
                      f * M[static_cast<size_t>(rank) * dim + j] % p;
        M[static_cast<size_t>(i) * dim + j] = static_cast<int>(((v % p) + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

inline void step_odometer(std::vector<int>& digits, int p) {
  for (size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] == p)
      digits[i] = 0;
    else
      break;
  }
}

u64 pow_u64(u64 b, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul_u64(r, b, "count formula");
  return r;
}

}  // namespace

std::vector<int> linear_matrix(const LinPoly& S) {
  const auto& ctx = *S.ctx;
  const int d = ctx.deg(), p = ctx.p();
  std::vector<int> A(static_cast<size_t>(d) * d, 0);
  for (size_t i = 0; i < S.s.size(); ++i) {
    if (S.s[i].is_zero()) continue;
    const std::vector<int> Mi = mul_matrix(ctx, S.s[i].c);
    const auto& Fi = ctx.frob_matrix(static_cast<int>(i));
    for (int r = 0; r < d; ++r)
      for (int k = 0; k < d; ++k) {
        const long long a = Mi[static_cast<size_t>(r) * d + k];
        if (a == 0) continue;
        for (int c = 0; c < d; ++c) {
          long long v = A[static_cast<size_t>(r) * d + c] + a * Fi[static_cast<size_t>(k) * d + c];
          A[static_cast<size_t>(r) * d + c] = static_cast<int>(v % p);
        }
      }
  }
  return A;
}

Element eval_Q(const LinPoly& S, const Element& x) {
  return trace(x * lin_evaluate(S, x));
}

u64 count_zero_trace(const LinPoly& S, u64 ceiling, int workers) {
  const FieldRef ctx = S.ctx;
  const u64 size = ctx->size();
  if (size > ceiling)
    throw ResourceLimitError("field too large to enumerate under the configured ceiling");
  const std::vector<int> A = linear_matrix(S);
  const std::vector<int>& T = ctx->trace_matrix();
  const int d = ctx->deg(), p = ctx->p();

  auto run = [&](u64 lo, u64 hi) -> u64 {
    std::vector<int> x(d), sx(d), prod(d), tr(d), scratch(2 * d);
    ctx->vdec(lo, x.data());
    u64 cnt = 0;
    for (u64 e = lo; e < hi; ++e) {
      ctx->vapply(A, x.data(), sx.data());
      ctx->vmul(x.data(), sx.data(), prod.data(), scratch.data());
      ctx->vapply(T, prod.data(), tr.data());
      if (ctx->vis_zero(tr.data())) ++cnt;
      step_odometer(x, p);
    }
    return cnt;
  };

  int nw = std::clamp(workers, 1, 64);
  if (static_cast<u64>(nw) > size / 1024) nw = static_cast<int>(std::max<u64>(1, size / 1024));
  if (nw == 1) return run(0, size);

  std::vector<u64> part(nw, 0);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  const u64 chunk = size / nw;
  for (int k = 0; k < nw; ++k) {
    const u64 lo = chunk * k;
    const u64 hi = (k + 1 == nw) ? size : chunk * (k + 1);
    pool.emplace_back([&part, &run, k, lo, hi] { part[k] = run(lo, hi); });
  }
  for (auto& th : pool) th.join();
  u64 total = 0;
  for (u64 v : part) total += v;
  return total;
}

int radical_dimension(const LinPoly& S, RadicalMethod method, u64 ceiling) {
  const FieldRef ctx = S.ctx;
  if (S.is_zero()) return ctx->n();  // the form vanishes, so the radical is everything
  const LinPoly R = radical_polynomial(S);
  switch (method) {
    case RadicalMethod::Matrix: {
      const int rank = mat_rank(linear_matrix(R), ctx->deg(), ctx->p());
      const int ker = ctx->deg() - rank;
      if (ker % ctx->t() != 0)
        throw std::logic_error("radical kernel dimension is not divisible by the base degree");
      return ker / ctx->t();
    }
    case RadicalMethod::Gcd: {
      const UPoly a = associate(R);
      const UPoly g = poly_gcd(a, upoly_xk_minus_one(ctx, ctx->n()));
      return g.degree();
    }
    case RadicalMethod::Brute: {
      u64 roots = 0;
      for (const Element& x : enumerate(ctx, ceiling))
        if (lin_evaluate(R, x).is_zero()) ++roots;
      const u64 q = ctx->q();
      int w = 0;
      u64 v = roots;
      while (v > 1 && v % q == 0) {
        v /= q;
        ++w;
      }
      if (v != 1) throw std::logic_error("radical root count is not a power of the subfield size");
      return w;
    }
  }
  throw std::invalid_argument("unknown radical method");
}

FormReport classify_form(const LinPoly& S, u64 ceiling, int workers) {
  const FieldRef ctx = S.ctx;
  FormReport rep;
  rep.p = ctx->p();
  rep.t = ctx->t();
  rep.n = ctx->n();
  rep.S = linpoly_terms(S);

  const int w = radical_dimension(S, RadicalMethod::Matrix);
  rep.methods.push_back("matrix");
  if (!S.is_zero()) {
    const LinPoly R = radical_polynomial(S);
    bool base_coeffs = true;
    for (const Element& c : R.s)
      if (!c.is_zero() && !is_in_subfield(c, 1)) {
        base_coeffs = false;
        break;
      }
    if (base_coeffs) {
      if (radical_dimension(S, RadicalMethod::Gcd) != w)
        throw std::logic_error("gcd radical method disagrees with the matrix method");
      rep.methods.push_back("gcd");
    }
    if (ctx->size() <= kDefaultPairOracleCeiling) {
      if (radical_dimension(S, RadicalMethod::Brute, ceiling) != w)
        throw std::logic_error("brute radical method disagrees with the matrix method");
      rep.methods.push_back("brute");
    }
  } else {
    rep.methods.push_back("gcd");
    rep.methods.push_back("brute");
  }
  rep.w = w;

  rep.nq = count_zero_trace(S, ceiling, workers);
  const u64 q = ctx->q();
  const int n = ctx->n();
  const u64 base = pow_u64(q, n - 1);
  if ((n - w) % 2 != 0) {
    if (rep.nq != base)
      throw std::logic_error("zero count contradicts the odd-rank count formula");
    rep.sign = '0';
  } else {
    const u64 delta = checked_mul_u64(q - 1, pow_u64(q, (n + w) / 2 - 1), "count formula");
    if (rep.nq == base + delta)
      rep.sign = '+';
    else if (base >= delta && rep.nq == base - delta)
      rep.sign = '-';
    else
      throw std::logic_error("zero count contradicts the even-rank count formula");
  }
  return rep;
}

std::vector<u64> brute_bilinear_radical(const LinPoly& S, u64 ceiling) {
  const FieldRef ctx = S.ctx;
  const u64 size = ctx->size();
  if (size > ceiling)
    throw ResourceLimitError("field too large for the pairwise radical oracle");
  const int d = ctx->deg(), p = ctx->p();
  const std::vector<int> A = linear_matrix(S);
  const std::vector<int>& T = ctx->trace_matrix();

  // Table of Q values, d digits per encoding.
  std::vector<int> qtab(static_cast<size_t>(size) * d);
  {
    std::vector<int> x(d, 0), sx(d), prod(d), scratch(2 * d);
    for (u64 e = 0; e < size; ++e) {
      ctx->vapply(A, x.data(), sx.data());
      ctx->vmul(x.data(), sx.data(), prod.data(), scratch.data());
      ctx->vapply(T, prod.data(), &qtab[static_cast<size_t>(e) * d]);
      step_odometer(x, p);
    }
  }

  std::vector<u64> unit_enc(d);
  {
    u64 pw = 1;
    for (int j = 0; j < d; ++j) {
      unit_enc[j] = pw;
      pw = checked_mul_u64(pw, static_cast<u64>(p), "unit encoding");
    }
  }

  // Biadditivity makes checking against basis vectors sufficient.
  std::vector<u64> out;
  std::vector<int> a(d, 0), b(d, 0), ab(d);
  for (u64 e = 0; e < size; ++e) {
    bool inside = true;
    for (int j = 0; j < d && inside; ++j) {
      std::fill(b.begin(), b.end(), 0);
      b[j] = 1;
      ctx->vadd(a.data(), b.data(), ab.data());
      const int* qa_b = &qtab[static_cast<size_t>(ctx->venc(ab.data())) * d];
      const int* qa = &qtab[static_cast<size_t>(e) * d];
      const int* qb = &qtab[static_cast<size_t>(unit_enc[j]) * d];
      for (int i = 0; i < d; ++i) {
        const int v = ((qa_b[i] - qa[i] - qb[i]) % p + p) % p;
        if (v != 0) {
          inside = false;
          break;
        }
      }
    }
    if (inside) out.push_back(e);
    step_odometer(a, p);
  }
  return out;
}

}  // namespace asq
