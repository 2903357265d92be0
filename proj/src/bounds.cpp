#include "fpm/bounds.hpp"

namespace fpm {

std::string PolyBound::render() const {
  return a.get_str() + "*n^" + k.get_str() + "+" + a.get_str();
}

namespace {
BigInt powBig(const BigInt& base, const BigInt& exp) {
  if (!exp.fits_ulong_p()) throw std::overflow_error("powBig: exponent too large");
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  return r;
}
}  // namespace

BigInt evalBound(const PolyBound& p, const BigInt& n) {
  return p.a * powBig(n, p.k) + p.a;
}

bool leqBound(const PolyBound& p1, const PolyBound& p2) {
  return p1.k <= p2.k && p1.a <= p2.a;
}

PolyBound composeBounds(const PolyBound& inner, const PolyBound& outer) {
  BigInt k = inner.k * outer.k;
  BigInt a = inner.a + outer.a + outer.a * powBig(inner.a, outer.k) * powBig(2, outer.k);
  return PolyBound(k, a);
}

BudgetReport counterBudget(const PolyBound& p, const BigInt& n, const BigInt& costConstant) {
  if (p.a < 12) throw std::invalid_argument("counterBudget: requires a >= 12");
  BigInt aFloor = p.a - p.a % 12;
  BigInt pPrime = aFloor * (powBig(n, p.k) + 1);
  BigInt twelfth = pPrime / 12;  // exact: 12 | aFloor
  BudgetReport r;
  r.pPrime = pPrime;
  r.prep = 7 * twelfth;
  r.exec = twelfth;
  r.balanceCheck = 4 * twelfth;
  BigInt c2k4 = costConstant * costConstant * powBig(p.k, 4) * ceilLog2(p.a) * ceilLog2(p.a);
  BigInt root = kthRootCeil(p.a, p.k.get_ui());
  r.cpUpper = 256;
  if (c2k4 > r.cpUpper) r.cpUpper = c2k4;
  if (root > r.cpUpper) r.cpUpper = root;
  return r;
}

unsigned long bitLength(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

BigInt kthRootFloor(const BigInt& v, unsigned long k) {
  BigInt r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

BigInt kthRootCeil(const BigInt& v, unsigned long k) {
  BigInt r = kthRootFloor(v, k);
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), k);
  if (p < v) r += 1;
  return r;
}

BigInt ceilLog2(const BigInt& v) {
  if (v < 1) throw std::invalid_argument("ceilLog2: v >= 1 required");
  if (v == 1) return 0;
  // bitlength(v-1) equals ceil(log2 v) for v >= 2
  return BigInt(bitLength(v - 1));
}

}  // namespace fpm
