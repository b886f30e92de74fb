#include "operalg/qseries.hpp"

#include <sstream>

namespace operalg {

QSeries::QSeries(int order) : order_(order) {
  if (order < 1) throw InputError("q-series order must be >= 1");
  c_.assign(static_cast<std::size_t>(order), Int(0));
}

QSeries QSeries::one(int order) {
  QSeries s(order);
  s.c_[0] = 1;
  return s;
}

const Int& QSeries::operator[](int n) const {
  if (n < 0 || n >= order_) throw InputError("q-series index out of range");
  return c_[static_cast<std::size_t>(n)];
}

Int& QSeries::operator[](int n) {
  if (n < 0 || n >= order_) throw InputError("q-series index out of range");
  return c_[static_cast<std::size_t>(n)];
}

void QSeries::check_compatible(const QSeries& o) const {
  if (order_ != o.order_)
    throw InputError("q-series truncation orders differ: " +
                     std::to_string(order_) + " vs " +
                     std::to_string(o.order_));
}

QSeries QSeries::operator+(const QSeries& o) const {
  check_compatible(o);
  QSeries out(order_);
  for (int n = 0; n < order_; ++n) out.c_[n] = c_[n] + o.c_[n];
  return out;
}

QSeries QSeries::operator-(const QSeries& o) const {
  check_compatible(o);
  QSeries out(order_);
  for (int n = 0; n < order_; ++n) out.c_[n] = c_[n] - o.c_[n];
  return out;
}

QSeries QSeries::operator*(const QSeries& o) const {
  check_compatible(o);
  QSeries out(order_);
  for (int i = 0; i < order_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j < order_; ++j) {
      if (o.c_[j] == 0) continue;
      out.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return out;
}

bool QSeries::operator==(const QSeries& o) const {
  check_compatible(o);
  return c_ == o.c_;
}

QSeries QSeries::times_one_minus_qk(int k) const {
  if (k < 1) throw InputError("factor exponent must be >= 1");
  QSeries out = *this;
  for (int n = order_ - 1; n >= k; --n) out.c_[n] -= c_[n - k];
  return out;
}

QSeries QSeries::times_inv_one_minus_qk(int k) const {
  if (k < 1) throw InputError("factor exponent must be >= 1");
  QSeries out = *this;
  // (sum a_n q^n) / (1 - q^k): b_n = a_n + b_{n-k}.
  for (int n = k; n < order_; ++n) out.c_[n] += out.c_[n - k];
  return out;
}

QSeries QSeries::div_exact(const QSeries& b) const {
  check_compatible(b);
  if (b.c_[0] == 0) throw InputError("division by a series with zero constant term");
  QSeries out(order_);
  for (int n = 0; n < order_; ++n) {
    Int acc = c_[n];
    for (int k = 1; k <= n; ++k)
      if (b.c_[k] != 0) acc -= b.c_[k] * out.c_[n - k];
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(),
                b.c_[0].get_mpz_t());
    if (r != 0)
      throw InputError("series division is not exact at q^" +
                       std::to_string(n));
    out.c_[n] = q;
  }
  return out;
}

std::optional<int> QSeries::first_diff(const QSeries& o) const {
  check_compatible(o);
  for (int n = 0; n < order_; ++n)
    if (c_[n] != o.c_[n]) return n;
  return std::nullopt;
}

Int QSeries::sum_of_coeffs() const {
  Int s(0);
  for (const Int& x : c_) s += x;
  return s;
}

std::string QSeries::str(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  bool any = false;
  for (int n = 0; n < order_ && shown < max_terms; ++n) {
    if (c_[n] == 0) continue;
    if (any) os << " + ";
    os << c_[n].get_str();
    if (n > 0) os << "*q^" << n;
    any = true;
    ++shown;
  }
  if (!any) os << "0";
  os << " + O(q^" << order_ << ")";
  return os.str();
}

}  // namespace operalg
