#include "operalg/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace operalg {

namespace {
// Saturating precision addition so exact (sentinel) windows stay exact.
int prec_add(int prec, int shift) {
  long s = static_cast<long>(prec) + shift;
  if (s >= LaurentSeries::exact_threshold) return LaurentSeries::unbounded;
  return static_cast<int>(s);
}
}  // namespace

LaurentSeries::LaurentSeries() : val_(0), prec_(unbounded), coeffs_{} {}

LaurentSeries::LaurentSeries(int val, int prec, std::vector<Rat> coeffs)
    : val_(val), prec_(prec), coeffs_(std::move(coeffs)) {
  normalize();
}

void LaurentSeries::normalize() {
  if (prec_ >= exact_threshold) {
    prec_ = unbounded;
    // Exact regime: trim zero margins; empty support is canonical exact zero.
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    std::size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1] == 0) --tail;
    if (lead == tail) {
      val_ = 0;
      coeffs_.clear();
    } else {
      if (lead > 0 || tail < coeffs_.size()) {
        coeffs_ = std::vector<Rat>(coeffs_.begin() + lead,
                                   coeffs_.begin() + tail);
        val_ += static_cast<int>(lead);
      }
    }
    return;
  }
  if (prec_ <= val_)
    throw PrecisionError("series window exhausted (precision " +
                         std::to_string(prec_) + " <= valuation " +
                         std::to_string(val_) + ")");
  if (coeffs_.size() != static_cast<std::size_t>(prec_ - val_))
    throw InputError("series window size mismatch");
  std::size_t lead = 0;
  while (lead + 1 < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (coeffs_[lead] == 0) {
    // All-zero window: canonical form is a single tracked zero coefficient.
    val_ = prec_ - 1;
    coeffs_.assign(1, Rat(0));
  } else if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    val_ += static_cast<int>(lead);
  }
}

LaurentSeries LaurentSeries::zero(int precision) {
  if (precision >= exact_threshold) return LaurentSeries();
  return LaurentSeries(precision - 1, precision, {Rat(0)});
}

LaurentSeries LaurentSeries::constant(const Rat& c, int precision) {
  return monomial(c, 0, precision);
}

LaurentSeries LaurentSeries::monomial(const Rat& c, int power, int precision) {
  if (precision >= exact_threshold)
    return LaurentSeries(power, unbounded, {c});
  if (power >= precision)
    throw PrecisionError("monomial power outside requested precision");
  std::vector<Rat> w(static_cast<std::size_t>(precision - power), Rat(0));
  w[0] = c;
  return LaurentSeries(power, precision, std::move(w));
}

LaurentSeries LaurentSeries::from_window(int valuation, int precision,
                                         std::vector<Rat> coeffs) {
  if (precision >= exact_threshold)
    throw InputError("from_window requires a finite precision");
  return LaurentSeries(valuation, precision, std::move(coeffs));
}

LaurentSeries LaurentSeries::polynomial(int valuation,
                                        std::vector<Rat> coeffs) {
  return LaurentSeries(valuation, unbounded, std::move(coeffs));
}

bool LaurentSeries::is_zero() const {
  for (const Rat& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<int> LaurentSeries::first_nonzero() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return val_ + static_cast<int>(k);
  return std::nullopt;
}

int LaurentSeries::support_end() const {
  return val_ + static_cast<int>(coeffs_.size());
}

const Rat& LaurentSeries::stored(int n) const {
  static const Rat kZero(0);
  if (n < val_ || n >= val_ + static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(n - val_)];
}

Rat LaurentSeries::coeff(int n) const {
  if (!exact() && n >= prec_)
    throw PrecisionError("coefficient of t^" + std::to_string(n) +
                         " beyond tracked precision " + std::to_string(prec_));
  return stored(n);
}

Rat LaurentSeries::residue() const { return coeff(-1); }

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (Rat& c : out.coeffs_) c = -c;
  return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  int prec = std::min(a.prec_, b.prec_);
  if (prec >= LaurentSeries::exact_threshold) {
    // Both exact.
    if (a.coeffs_.empty()) return b;
    if (b.coeffs_.empty()) return a;
    int lo = std::min(a.val_, b.val_);
    int hi = std::max(a.val_ + static_cast<int>(a.coeffs_.size()),
                      b.val_ + static_cast<int>(b.coeffs_.size()));
    std::vector<Rat> w(static_cast<std::size_t>(hi - lo), Rat(0));
    for (int n = lo; n < hi; ++n)
      w[static_cast<std::size_t>(n - lo)] = a.stored(n) + b.stored(n);
    return LaurentSeries(lo, LaurentSeries::unbounded, std::move(w));
  }
  int lo = std::min(a.val_, b.val_);
  // An exact operand may carry support below the finite window's valuation;
  // the sum still only knows coefficients up to `prec`.
  std::vector<Rat> w(static_cast<std::size_t>(prec - lo), Rat(0));
  for (int n = lo; n < prec; ++n)
    w[static_cast<std::size_t>(n - lo)] = a.stored(n) + b.stored(n);
  return LaurentSeries(lo, prec, std::move(w));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return a + (-b);
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  *this = *this + o;
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
  *this = *this - o;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // An exact-zero factor kills every coefficient at every order, regardless
  // of the other factor's window.
  if (a.coeffs_.empty() || b.coeffs_.empty()) return LaurentSeries();
  int prec = std::min(prec_add(a.prec_, b.val_), prec_add(b.prec_, a.val_));
  int lo = a.val_ + b.val_;
  int hi;
  if (prec >= LaurentSeries::exact_threshold) {
    hi = a.val_ + static_cast<int>(a.coeffs_.size()) + b.val_ +
         static_cast<int>(b.coeffs_.size()) - 1;
  } else {
    hi = prec;
  }
  std::vector<Rat> w(static_cast<std::size_t>(hi - lo), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    int na = a.val_ + static_cast<int>(i);
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      int n = na + b.val_ + static_cast<int>(j);
      if (n >= hi) break;
      w[static_cast<std::size_t>(n - lo)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentSeries(lo, prec, std::move(w));
}

LaurentSeries operator*(const Rat& c, const LaurentSeries& a) {
  LaurentSeries out = a;
  for (Rat& x : out.coeffs_) x *= c;
  out.normalize();
  return out;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries out = *this;
  out.val_ += k;
  out.prec_ = prec_add(out.prec_, k);
  return out;
}

LaurentSeries LaurentSeries::truncated(int precision) const {
  if (precision > prec_)
    throw PrecisionError("cannot raise precision from " +
                         std::to_string(prec_) + " to " +
                         std::to_string(precision));
  if (precision >= exact_threshold) return *this;
  int hi = std::min(precision, val_ + static_cast<int>(coeffs_.size()));
  std::vector<Rat> w;
  if (hi > val_)
    w.assign(coeffs_.begin(), coeffs_.begin() + (hi - val_));
  int lo = val_;
  if (static_cast<int>(w.size()) < precision - lo)
    w.resize(static_cast<std::size_t>(precision - lo), Rat(0));
  if (w.empty()) {  // exact zero being truncated
    lo = precision - 1;
    w.assign(1, Rat(0));
  }
  return LaurentSeries(lo, precision, std::move(w));
}

LaurentSeries LaurentSeries::derivative() const {
  std::vector<Rat> w;
  int lo = val_ - 1;
  w.reserve(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    int n = val_ + static_cast<int>(k);
    w.push_back(Rat(n) * coeffs_[k]);
  }
  if (exact()) return LaurentSeries(lo, unbounded, std::move(w));
  return LaurentSeries(lo, prec_ - 1, std::move(w));
}

LaurentSeries LaurentSeries::inverse() const {
  auto lead = first_nonzero();
  if (!lead || *lead != val_) {
    // Finite windows normalize so a nonzero series has a nonzero leading
    // coefficient; anything else is not invertible as presented.
    throw InputError("inverse of a series with zero leading coefficient");
  }
  if (exact()) {
    if (coeffs_.size() == 1)
      return LaurentSeries(-val_, unbounded, {Rat(1) / coeffs_[0]});
    throw InputError(
        "inverse of an exact polynomial needs a target precision; use "
        "inverse_to");
  }
  return inverse_to(prec_ - 2 * val_);
}

LaurentSeries LaurentSeries::inverse_to(int precision) const {
  auto lead = first_nonzero();
  if (!lead || *lead != val_)
    throw InputError("inverse of a series with zero leading coefficient");
  if (!exact() && precision > prec_ - 2 * val_)
    throw PrecisionError("inverse precision exceeds what the input tracks");
  if (precision >= exact_threshold)
    throw InputError("inverse_to requires a finite target precision");
  // 1 / (c t^v (1 + r))  with the reciprocal computed by convolution.
  int v = val_;
  int out_val = -v;
  int len = precision - out_val;
  if (len <= 0) throw PrecisionError("inverse target window is empty");
  std::vector<Rat> w(static_cast<std::size_t>(len), Rat(0));
  const Rat inv_c = Rat(1) / coeffs_[0];
  w[0] = inv_c;
  for (int k = 1; k < len; ++k) {
    Rat acc(0);
    for (int j = 1; j <= k; ++j) {
      const Rat& aj = stored(v + j);
      if (aj != 0) acc += aj * w[static_cast<std::size_t>(k - j)];
    }
    w[static_cast<std::size_t>(k)] = -inv_c * acc;
  }
  return LaurentSeries(out_val, precision, std::move(w));
}

LaurentSeries LaurentSeries::dilated(const Rat& a) const {
  if (a == 0) throw InputError("dilation by zero");
  LaurentSeries out = *this;
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) {
    int n = out.val_ + static_cast<int>(k);
    if (out.coeffs_[k] != 0) out.coeffs_[k] *= rat_pow(a, n);
  }
  return out;
}

bool LaurentSeries::identical(const LaurentSeries& o) const {
  return val_ == o.val_ && prec_ == o.prec_ && coeffs_ == o.coeffs_;
}

bool agrees(const LaurentSeries& a, const LaurentSeries& b) {
  int prec = std::min(a.prec_, b.prec_);
  int lo = std::min(a.val_, b.val_);
  int hi;
  if (prec >= LaurentSeries::exact_threshold) {
    hi = std::max(a.val_ + static_cast<int>(a.coeffs_.size()),
                  b.val_ + static_cast<int>(b.coeffs_.size()));
  } else {
    hi = prec;
  }
  for (int n = lo; n < hi; ++n)
    if (a.stored(n) != b.stored(n)) return false;
  return true;
}

std::string LaurentSeries::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    int n = val_ + static_cast<int>(k);
    if (any) os << " + ";
    os << format_rational(coeffs_[k]);
    if (n != 0) os << "*t^" << n;
    any = true;
  }
  if (!any) os << "0";
  if (exact())
    os << " (exact)";
  else
    os << " + O(t^" << prec_ << ")";
  return os.str();
}

}  // namespace operalg
