#include "qvar/model.hpp"

#include <algorithm>

#include "qvar/error.hpp"

namespace qvar {

SetValuedMap::SetValuedMap(std::string name, std::vector<PointList> images)
    : name_(std::move(name)), images_(std::move(images)) {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    auto& img = images_[x];
    if (img.empty()) throw InvalidArgument("map '" + name_ + "' has an empty image at point " + std::to_string(x));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (img.back() >= images_.size()) throw InvalidArgument("map '" + name_ + "' sends a point outside the instance");
  }
}

SetValuedMap SetValuedMap::from_selector(std::string name, const PointList& selector) {
  std::vector<PointList> images;
  images.reserve(selector.size());
  for (auto y : selector) images.push_back({y});
  return SetValuedMap(std::move(name), std::move(images));
}

bool SetValuedMap::contains(PointIndex x, PointIndex y) const {
  const auto& img = images_.at(x);
  return std::binary_search(img.begin(), img.end(), y);
}

Bivariate::Bivariate(std::string name, std::size_t n, std::vector<ExtendedRational> values)
    : name_(std::move(name)), n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * n_) throw InvalidArgument("bivariate '" + name_ + "' is not n x n");
}

Bivariate Bivariate::from_objective(const Objective& f, std::string name) {
  const std::size_t n = f.size();
  std::vector<ExtendedRational> values;
  values.reserve(n * n);
  for (PointIndex x = 0; x < n; ++x) {
    if (!f.in_domain(x)) {
      throw InvalidArgument("F(x,y) = f(y) - f(x) needs f finite everywhere; f(" + std::to_string(x) + ") = +inf");
    }
  }
  for (PointIndex x = 0; x < n; ++x)
    for (PointIndex y = 0; y < n; ++y) values.emplace_back(Rational(f(y).value() - f(x).value()));
  return Bivariate(std::move(name), n, std::move(values));
}

Objective Bivariate::slice(PointIndex x0) const {
  std::vector<ExtendedRational> values;
  for (PointIndex y = 0; y < n_; ++y) values.push_back((*this)(x0, y));
  return Objective(name_ + "(" + std::to_string(x0) + ",.)", std::move(values));
}

const char* to_string(Principle p) {
  switch (p) {
    case Principle::kEkeland:
      return "ekeland";
    case Principle::kEkelandScaled:
      return "ekeland-scaled";
    case Principle::kCaristi:
      return "caristi";
    case Principle::kTakahashi:
      return "takahashi";
    case Principle::kArutyunov:
      return "arutyunov";
    case Principle::kOettliThera:
      return "oettli-thera";
  }
  return "ekeland";
}

Principle parse_principle(const std::string& text) {
  for (auto p : {Principle::kEkeland, Principle::kEkelandScaled, Principle::kCaristi, Principle::kTakahashi,
                 Principle::kArutyunov, Principle::kOettliThera})
    if (text == to_string(p)) return p;
  throw InvalidArgument("unknown principle '" + text + "'");
}

const char* to_string(CaristiVariant v) { return v == CaristiVariant::kWeak ? "weak" : "strong"; }

}  // namespace qvar
