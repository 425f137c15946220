#include "kig/model.hpp"

#include <cmath>
#include <sstream>

#include "kig/errors.hpp"

namespace kig {
namespace {

std::string fmt_complex(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

void check_finite(const ParameterPoint& pt) {
  for (std::size_t i = 0; i < pt.coords.size(); ++i)
    if (!std::isfinite(pt.coords[i].real()) || !std::isfinite(pt.coords[i].imag())) {
      std::ostringstream os;
      os << "coordinate " << i << ": non-finite value";
      throw ValidationError(os.str());
    }
}

}  // namespace

FilterModel FilterModel::arfima(Complex d, std::vector<Complex> poles,
                                std::vector<Complex> zeros, double margin) {
  FilterModel m;
  m.kind_ = ModelKind::Arfima;
  m.label_ = "arfima";
  m.p_ = static_cast<int>(poles.size());
  m.q_ = static_cast<int>(zeros.size());
  m.margin_ = margin;
  std::vector<Complex> coords;
  coords.reserve(1 + poles.size() + zeros.size());
  coords.push_back(d);
  coords.insert(coords.end(), poles.begin(), poles.end());
  coords.insert(coords.end(), zeros.begin(), zeros.end());
  m.base_ = ParameterPoint(std::move(coords));
  m.require_in_domain(m.base_);
  return m;
}

FilterModel FilterModel::arma(std::vector<Complex> poles,
                              std::vector<Complex> zeros, double margin) {
  FilterModel m;
  m.kind_ = ModelKind::RationalArma;
  m.label_ = "arma";
  m.p_ = static_cast<int>(poles.size());
  m.q_ = static_cast<int>(zeros.size());
  m.margin_ = margin;
  std::vector<Complex> coords;
  coords.reserve(poles.size() + zeros.size());
  coords.insert(coords.end(), poles.begin(), poles.end());
  coords.insert(coords.end(), zeros.begin(), zeros.end());
  m.base_ = ParameterPoint(std::move(coords));
  m.require_in_domain(m.base_);
  return m;
}

FilterModel FilterModel::generic(int dim, SeriesSource source, ParameterPoint base,
                                 std::string label, double margin) {
  if (dim < 1) throw ValidationError("generic model: dimension must be >= 1");
  if (!source) throw ValidationError("generic model: missing series source");
  FilterModel m;
  m.kind_ = ModelKind::GenericSeries;
  m.label_ = std::move(label);
  m.p_ = dim;  // generic coordinates are stored in the pole slots
  m.q_ = 0;
  m.margin_ = margin;
  m.source_ = std::move(source);
  if (base.coords.empty()) base.coords.assign(static_cast<std::size_t>(dim), Complex(0.0));
  m.base_ = std::move(base);
  m.require_in_domain(m.base_);
  return m;
}

Complex FilterModel::d_of(const ParameterPoint& pt) const {
  return has_d() ? pt.coords.at(0) : Complex(0.0);
}

std::span<const Complex> FilterModel::poles_of(const ParameterPoint& pt) const {
  const std::size_t off = has_d() ? 1 : 0;
  return {pt.coords.data() + off, static_cast<std::size_t>(p_)};
}

std::span<const Complex> FilterModel::zeros_of(const ParameterPoint& pt) const {
  const std::size_t off = (has_d() ? 1 : 0) + static_cast<std::size_t>(p_);
  return {pt.coords.data() + off, static_cast<std::size_t>(q_)};
}

void FilterModel::require_in_domain(const ParameterPoint& pt) const {
  if (pt.dim() != dim()) {
    std::ostringstream os;
    os << "point has " << pt.dim() << " coordinates, model expects " << dim();
    throw ValidationError(os.str());
  }
  check_finite(pt);
  const double bound = 1.0 - margin_;

  if (kind_ == ModelKind::GenericSeries) {
    for (int i = 0; i < p_; ++i)
      if (std::abs(pt.coords[i]) > bound) {
        std::ostringstream os;
        os << "coords[" << i << "]: modulus " << std::abs(pt.coords[i])
           << " exceeds the admissible bound " << bound;
        throw ValidationError(os.str());
      }
    return;
  }

  if (has_d()) {
    const Complex d = pt.coords[0];
    if (!(std::abs(d.real()) < kMaxAbsD)) {
      std::ostringstream os;
      os << "d: real part " << d.real() << " must lie in (-0.5, 0.5)";
      throw ValidationError(os.str());
    }
  }
  const auto poles = poles_of(pt);
  const auto zeros = zeros_of(pt);
  auto check_disk = [&](std::span<const Complex> v, const char* name) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (std::abs(v[i]) > bound) {
        std::ostringstream os;
        os << name << "[" << i << "]: modulus " << std::abs(v[i])
           << " exceeds the admissible bound " << bound;
        throw ValidationError(os.str());
      }
  };
  check_disk(poles, "poles");
  check_disk(zeros, "zeros");

  auto check_separation = [&](std::span<const Complex> a, std::span<const Complex> b,
                              const char* na, const char* nb, bool same) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = same ? i + 1 : 0; j < b.size(); ++j)
        if (std::abs(a[i] - b[j]) < kSeparationTol) {
          std::ostringstream os;
          os << na << "[" << i << "] and " << nb << "[" << j << "]: separation "
             << std::abs(a[i] - b[j]) << " below " << kSeparationTol
             << " (parameters not identifiable)";
          throw ValidationError(os.str());
        }
  };
  check_separation(poles, poles, "poles", "poles", true);
  check_separation(zeros, zeros, "zeros", "zeros", true);
  check_separation(poles, zeros, "poles", "zeros", false);
}

bool FilterModel::in_domain(const ParameterPoint& pt, double shrink) const noexcept {
  if (pt.dim() != dim()) return false;
  for (const Complex& c : pt.coords)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  const double bound = 1.0 - margin_ - shrink;

  if (kind_ == ModelKind::GenericSeries) {
    for (int i = 0; i < p_; ++i)
      if (std::abs(pt.coords[i]) > bound) return false;
    return true;
  }

  if (has_d() && !(std::abs(pt.coords[0].real()) < kMaxAbsD - shrink)) return false;
  const auto poles = poles_of(pt);
  const auto zeros = zeros_of(pt);
  for (std::size_t i = 0; i < poles.size(); ++i)
    if (std::abs(poles[i]) > bound) return false;
  for (std::size_t i = 0; i < zeros.size(); ++i)
    if (std::abs(zeros[i]) > bound) return false;
  const double sep = kSeparationTol + 2.0 * shrink;
  for (std::size_t i = 0; i < poles.size(); ++i)
    for (std::size_t j = i + 1; j < poles.size(); ++j)
      if (std::abs(poles[i] - poles[j]) < sep) return false;
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t j = i + 1; j < zeros.size(); ++j)
      if (std::abs(zeros[i] - zeros[j]) < sep) return false;
  for (std::size_t i = 0; i < poles.size(); ++i)
    for (std::size_t j = 0; j < zeros.size(); ++j)
      if (std::abs(poles[i] - zeros[j]) < sep) return false;
  return true;
}

}  // namespace kig
