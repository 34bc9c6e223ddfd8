#include "bessellab/data_function.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "bessellab/errors.hpp"
#include "text_scanner.hpp"

namespace bessellab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct TagName {
  SmoothTag tag;
  const char* name;
};
constexpr TagName kTags[] = {{SmoothTag::One, "one"},   {SmoothTag::Gauss, "gauss"},       {SmoothTag::Exp, "exp"},
                             {SmoothTag::Sech, "sech"}, {SmoothTag::Logistic, "logistic"}, {SmoothTag::Ricker, "ricker"}};

const char* tag_name(SmoothTag tag) {
  for (const auto& t : kTags)
    if (t.tag == tag) return t.name;
  return "one";
}

bool parse_tag(detail::Scanner& sc, SmoothTag& out) {
  for (const auto& t : kTags) {
    if (sc.accept_word(t.name)) {
      out = t.tag;
      return true;
    }
  }
  return false;
}

double smooth_value(SmoothTag tag, double y) {
  switch (tag) {
    case SmoothTag::One: return 1.0;
    case SmoothTag::Gauss: return std::exp(-y * y);
    case SmoothTag::Exp: return std::exp(-y);
    case SmoothTag::Sech: return 1.0 / std::cosh(y);
    case SmoothTag::Logistic: return 1.0 / (1.0 + std::exp(4.0 * (y - 1.0)));
    case SmoothTag::Ricker: return (1.0 - y * y) * std::exp(-0.5 * y * y);
  }
  return 0.0;
}

}  // namespace

DataFunction DataFunction::power(double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("power exponent must be finite");
  return DataFunction(DataKind::Power, {alpha});
}

DataFunction DataFunction::gaussian_growth(double T, double degree, double lambda, double eps) {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("gaussian_growth needs 0 < T < inf");
  if (!std::isfinite(degree) || !std::isfinite(lambda) || !std::isfinite(eps))
    throw DomainError("gaussian_growth parameters must be finite");
  return DataFunction(DataKind::GaussianGrowth, {T, degree, lambda, eps});
}

DataFunction DataFunction::log_damped(double beta) {
  if (!std::isfinite(beta)) throw DomainError("log_damped exponent must be finite");
  return DataFunction(DataKind::LogDamped, {beta});
}

DataFunction DataFunction::indicator(double a, double b) {
  if (!(a >= 0.0) || !(b > a) || std::isinf(a)) throw DomainError("indicator needs 0 <= a < b");
  return DataFunction(DataKind::Indicator, {a, b});
}

DataFunction DataFunction::bounded_smooth(SmoothTag tag) { return DataFunction(DataKind::BoundedSmooth, {}, tag); }

DataFunction DataFunction::parse(std::string_view text) {
  detail::Scanner sc(text);
  auto args = [&](std::size_t min_count, std::size_t max_count) {
    std::vector<double> v;
    sc.expect('(');
    v.push_back(sc.number());
    while (sc.accept(',')) v.push_back(sc.number());
    sc.expect(')');
    if (v.size() < min_count || v.size() > max_count) sc.fail("wrong number of arguments");
    return v;
  };

  std::optional<DataFunction> out;
  SmoothTag tag{};
  const std::size_t start = sc.position();
  try {
    if (sc.accept_word("power")) {
      out = power(args(1, 1)[0]);
    } else if (sc.accept_word("gaussian_growth")) {
      const auto v = args(2, 4);
      out = gaussian_growth(v[0], v[1], v.size() > 2 ? v[2] : 0.0, v.size() > 3 ? v[3] : 0.25);
    } else if (sc.accept_word("log_damped")) {
      out = log_damped(args(1, 1)[0]);
    } else if (sc.accept_word("indicator")) {
      const auto v = args(2, 2);
      out = indicator(v[0], v[1]);
    } else if (sc.accept_word("bounded_smooth")) {
      sc.expect('(');
      if (!parse_tag(sc, tag)) sc.fail("unknown bounded_smooth tag");
      sc.expect(')');
      out = bounded_smooth(tag);
    } else if (parse_tag(sc, tag)) {
      out = bounded_smooth(tag);
    } else {
      sc.fail("unknown data function");
    }
  } catch (const DomainError& e) {
    throw ParseError(e.what(), start);
  }
  if (!sc.at_end()) sc.fail("unexpected trailing input");
  return *out;
}

std::string DataFunction::to_string() const {
  using detail::format_number;
  switch (kind_) {
    case DataKind::Power: return "power(" + format_number(params_[0]) + ")";
    case DataKind::GaussianGrowth:
      return "gaussian_growth(" + format_number(params_[0]) + ", " + format_number(params_[1]) + ", " +
             format_number(params_[2]) + ", " + format_number(params_[3]) + ")";
    case DataKind::LogDamped: return "log_damped(" + format_number(params_[0]) + ")";
    case DataKind::Indicator: return "indicator(" + format_number(params_[0]) + ", " + format_number(params_[1]) + ")";
    case DataKind::BoundedSmooth: return std::string("bounded_smooth(") + tag_name(tag_) + ")";
  }
  return "";
}

double DataFunction::operator()(double y) const {
  switch (kind_) {
    case DataKind::Indicator: return (y >= params_[0] && y < params_[1]) ? 1.0 : 0.0;
    case DataKind::BoundedSmooth: return smooth_value(tag_, y);
    default: return sign(y) * std::exp(log_abs(y));
  }
}

double DataFunction::log_abs(double y) const {
  if (!(y > 0.0)) throw DomainError("data functions live on y > 0");
  switch (kind_) {
    case DataKind::Power: return params_[0] * std::log(y);
    case DataKind::GaussianGrowth:
      if (y <= 1.0) return -(2.0 * params_[2] + params_[3]) * std::log(y);
      return params_[1] * std::log(y) + y * y / (4.0 * params_[0]);
    case DataKind::LogDamped: return std::log(y) - params_[0] * std::log(std::log(y + std::numbers::e));
    case DataKind::Indicator: return (y >= params_[0] && y < params_[1]) ? 0.0 : -kInf;
    case DataKind::BoundedSmooth:
      switch (tag_) {
        case SmoothTag::Gauss: return -y * y;
        case SmoothTag::Exp: return -y;
        case SmoothTag::Sech: return -y - std::log1p(std::exp(-2.0 * y)) + std::numbers::ln2;
        case SmoothTag::Ricker:
          if (y == 1.0) return -kInf;
          return std::log(std::abs(1.0 - y)) + std::log1p(y) - 0.5 * y * y;
        case SmoothTag::Logistic: {
          const double s = 4.0 * (y - 1.0);
          return s > 0 ? -s - std::log1p(std::exp(-s)) : -std::log1p(std::exp(s));
        }
        default: {
          const double v = std::abs(smooth_value(tag_, y));
          return v > 0.0 ? std::log(v) : -kInf;
        }
      }
  }
  return -kInf;
}

double DataFunction::sign(double y) const {
  if (kind_ == DataKind::Indicator) return (*this)(y);
  if (kind_ == DataKind::BoundedSmooth && tag_ == SmoothTag::Ricker) return y < 1.0 ? 1.0 : (y > 1.0 ? -1.0 : 0.0);
  return 1.0;
}

std::vector<double> DataFunction::split_points() const {
  switch (kind_) {
    case DataKind::GaussianGrowth: return {1.0};
    case DataKind::Indicator: {
      std::vector<double> v;
      if (params_[0] > 0.0) v.push_back(params_[0]);
      if (std::isfinite(params_[1])) v.push_back(params_[1]);
      return v;
    }
    default: return {};
  }
}

bool DataFunction::continuous_at(double y) const {
  for (double s : split_points())
    if (y == s) return false;
  return true;
}

bool DataFunction::nonnegative() const { return !(kind_ == DataKind::BoundedSmooth && tag_ == SmoothTag::Ricker); }

double DataFunction::sup_abs() const {
  switch (kind_) {
    case DataKind::Power: return params_[0] == 0.0 ? 1.0 : kInf;
    case DataKind::Indicator:
    case DataKind::BoundedSmooth: return 1.0;
    default: return kInf;
  }
}

double DataFunction::quadratic_growth() const {
  return kind_ == DataKind::GaussianGrowth ? 1.0 / (4.0 * params_[0]) : 0.0;
}

bool DataFunction::singular_at_zero() const {
  if (kind_ == DataKind::Power) return params_[0] < 0.0;
  if (kind_ == DataKind::GaussianGrowth) return 2.0 * params_[2] + params_[3] > 0.0;
  return false;
}

}  // namespace bessellab
