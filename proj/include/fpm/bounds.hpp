#ifndef FPM_BOUNDS_HPP
#define FPM_BOUNDS_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fpm {

using BigInt = mpz_class;

/// The bounding polynomial p(n) = a*n^k + a, given by two positive integers.
/// One such polynomial governs both the time budget and the input balance of
/// a counted program. Arbitrary-precision throughout: composed bounds grow
/// doubly fast and must not wrap.
struct PolyBound {
  BigInt k;  // degree, >= 1
  BigInt a;  // coefficient, >= 1 (>= 12 when driving the counted machine)

  PolyBound(BigInt k_, BigInt a_) : k(std::move(k_)), a(std::move(a_)) {
    if (k < 1 || a < 1) throw std::invalid_argument("PolyBound: k and a must be positive");
  }
  PolyBound(long k_, long a_) : PolyBound(BigInt(k_), BigInt(a_)) {}

  bool operator==(const PolyBound&) const = default;

  std::string render() const;  // "a*n^k+a"
};

/// a*n^k + a, exact.
BigInt evalBound(const PolyBound& p, const BigInt& n);

/// Pointwise order; for this shape of polynomial it reduces to the
/// coordinatewise test k1 <= k2 and a1 <= a2.
bool leqBound(const PolyBound& p1, const PolyBound& p2);

/// Bound of a composition outer(inner(.)): degree k1*k2 and coefficient
/// a1 + a2 + a2*a1^k2*2^k2. Dominates inner(n) + outer(inner(n)).
PolyBound composeBounds(const PolyBound& inner, const PolyBound& outer);

/// The per-run budget split of the counted machine, all parts exact:
/// pPrime = (a - a%12)*(n^k + 1), divided 7/12 counter preparation, 1/12
/// execution, 4/12 balance checking. cpUpper is the cost-model threshold
/// below which counter preparation may exceed its share.
struct BudgetReport {
  BigInt pPrime;
  BigInt prep;
  BigInt exec;
  BigInt balanceCheck;
  BigInt cpUpper;
};

/// Requires p.a >= 12. costConstant is the machine-dependent constant of the
/// preparation cost model (default 4).
BudgetReport counterBudget(const PolyBound& p, const BigInt& n, const BigInt& costConstant = 4);

/// Smallest m with 2^m > v, i.e. the bitlength of v (bitlength(0) = 0).
unsigned long bitLength(const BigInt& v);

/// Floor of the k-th root.
BigInt kthRootFloor(const BigInt& v, unsigned long k);

/// Ceiling of the k-th root.
BigInt kthRootCeil(const BigInt& v, unsigned long k);

/// Ceiling of log2(v); requires v >= 1.
BigInt ceilLog2(const BigInt& v);

}  // namespace fpm

#endif
