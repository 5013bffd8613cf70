#include "holedim/dimension.hpp"

#include "holedim/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>

namespace holedim {

namespace {

Rational bottom(unsigned k) { return Rational(1, k); }
Rational top(unsigned k) { return Rational(k - 1, k); }

// b <= (k-1)/k - k^-(N+1) with the smallest N >= 1, bumped to even.
std::optional<unsigned> u_n_order(const Rational& b, unsigned k) {
  const Rational gap = top(k) - b;
  if (gap <= 0) return std::nullopt;
  unsigned n = 1;
  while (Rational(BigInt(1), big_pow(k, n + 1)) > gap) ++n;
  if (n % 2 == 1) ++n;  // U_{N+1} is a subset of U_N
  return n;
}

std::optional<Certificate> r1_certificate(const Hole& hole, const RegionClass& region) {
  if (hole.k() < 3) return std::nullopt;
  const auto try_side = [&](const Hole& h, bool reflected) -> std::optional<Certificate> {
    const auto n = u_n_order(h.b(), h.k());
    if (!n) return std::nullopt;
    const double radius = spectral_radius(u_n_subshift(h.k(), *n).graph);
    if (!(radius > 1.0)) return std::nullopt;
    Certificate c;
    c.kind = CertificateKind::R1Subshift;
    c.parameter = *n;
    c.radius = radius;
    c.reflected = reflected;
    return c;
  };
  if (region.r1_left()) {
    if (auto c = try_side(hole, false)) return c;
  }
  if (region.r1_right()) {
    if (auto c = try_side(reflect_hole(hole), true)) return c;
  }
  return std::nullopt;
}

// Certificates that need no subshift approximation of the hole.
std::optional<Certificate> structural_certificate(const Hole& hole, const RegionClass& region,
                                                  const EstimatorOptions& options) {
  if (region.r1_left() || region.r1_right()) {
    if (auto c = r1_certificate(hole, region)) return c;
  }
  if (const auto j = digit_block_size(hole)) {
    Certificate c;
    c.kind = CertificateKind::DigitBlock;
    c.parameter = *j;
    return c;
  }
  if (region.strict_r2()) {
    const Rational threshold = 1 - 2 * thue_morse_preimage_upper(hole.k(), options.thue_morse_digits);
    if (hole.b() - hole.a() < threshold) {
      Certificate c;
      c.kind = CertificateKind::WidthBound;
      c.threshold = threshold;
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> radius_certificate(const SpectralBracket& inner, const SpectralBracket& window,
                                              unsigned depth, bool reduced) {
  for (const auto& [bracket, mode] : {std::pair{inner, Mode::Inner}, std::pair{window, Mode::Window}}) {
    if (bracket.lower > 1.0) {
      Certificate c;
      c.kind = CertificateKind::SubshiftRadius;
      c.parameter = depth;
      c.radius = bracket.lower;
      c.mode = mode;
      c.on_reduced_hole = reduced;
      return c;
    }
  }
  return std::nullopt;
}

DimensionBracket to_dimension(const EntropyBounds& e, unsigned k) {
  const double log_k = std::log(static_cast<double>(k));
  return {std::clamp(e.lower / log_k, 0.0, 1.0), std::clamp(e.upper / log_k, 0.0, 1.0)};
}

}  // namespace

std::string to_string(RegionTag t) {
  switch (t) {
    case RegionTag::R1Left: return "R1-left";
    case RegionTag::R1Right: return "R1-right";
    case RegionTag::R2: return "R2";
  }
  return "?";
}

std::vector<RegionTag> RegionClass::tags() const {
  std::vector<RegionTag> out;
  if (r1_left()) out.push_back(RegionTag::R1Left);
  if (r1_right()) out.push_back(RegionTag::R1Right);
  if (r2()) out.push_back(RegionTag::R2);
  return out;
}

RegionTag RegionClass::preferred() const {
  if (r1_left()) return RegionTag::R1Left;
  if (r1_right()) return RegionTag::R1Right;
  return RegionTag::R2;
}

RegionClass classify(const Hole& hole) {
  const Rational lo = bottom(hole.k());
  const Rational hi = top(hole.k());
  RegionClass r;
  r.b_at_most_top = hole.b() <= hi;
  r.a_at_least_bottom = hole.a() >= lo;
  r.a_at_most_bottom = hole.a() <= lo;
  r.b_at_least_top = hole.b() >= hi;
  r.a_below_bottom = hole.a() < lo;
  r.b_above_top = hole.b() > hi;
  return r;
}

std::optional<unsigned> digit_block_size(const Hole& hole) {
  const unsigned k = hole.k();
  for (unsigned j = k - 1; j >= 2; --j) {
    if (hole.b() <= Rational(k - j, k) || hole.a() >= Rational(j, k)) return j;
  }
  return std::nullopt;
}

std::optional<double> digit_block_lower_bound(const Hole& hole) {
  const auto j = digit_block_size(hole);
  if (!j) return std::nullopt;
  return std::log(static_cast<double>(*j)) / std::log(static_cast<double>(hole.k()));
}

std::pair<Rational, Rational> reduce_hole(const Hole& hole) {
  const auto region = classify(hole);
  if (!region.strict_r2()) {
    throw std::invalid_argument("reduction requires a < 1/k and b > (k-1)/k");
  }
  return {cantor_function(hole.a(), hole.k()), cantor_function(hole.b(), hole.k())};
}

Hole reflect_hole(const Hole& hole) { return Hole(1 - hole.b(), 1 - hole.a(), hole.k()); }

Rational thue_morse_preimage_upper(unsigned k, unsigned digits) {
  return thue_morse_preimage(k, digits) + Rational(BigInt(1), big_pow(k, digits));
}

std::string to_string(CertificateKind c) {
  switch (c) {
    case CertificateKind::R1Subshift: return "r1-subshift";
    case CertificateKind::DigitBlock: return "digit-block";
    case CertificateKind::WidthBound: return "corollary-bound";
    case CertificateKind::SubshiftRadius: return "subshift-radius";
  }
  return "?";
}

std::string Certificate::describe() const {
  std::ostringstream out;
  out.precision(12);
  switch (kind) {
    case CertificateKind::R1Subshift:
      out << "U_" << parameter << " embeds in the survivor set" << (reflected ? " of the reflected hole" : "")
          << "; spectral radius " << radius;
      break;
    case CertificateKind::DigitBlock:
      out << "full shift on the " << parameter << " outer digits survives";
      break;
    case CertificateKind::WidthBound:
      out << "b - a < " << to_decimal_string(threshold, 12);
      break;
    case CertificateKind::SubshiftRadius:
      out << to_string(mode) << " subshift at depth " << parameter << (on_reduced_hole ? " of the reduced hole" : "")
          << " has spectral radius >= " << radius;
      break;
  }
  return out.str();
}

std::string to_string(Verdict v) { return v == Verdict::Positive ? "positive" : "undetermined"; }

std::string to_string(EstimateMode m) {
  switch (m) {
    case EstimateMode::Direct: return "direct";
    case EstimateMode::Reduced: return "reduced";
    case EstimateMode::Both: return "both";
  }
  return "?";
}

Positivity positivity(const Hole& hole, unsigned depth_budget, const EstimatorOptions& options) {
  const auto region = classify(hole);
  if (auto c = structural_certificate(hole, region, options)) return {Verdict::Positive, std::move(c), 0};
  if (depth_budget == 0) return {};

  const auto inner = spectral_radius_of(build_approximation(hole, depth_budget, Mode::Inner, options.sft),
                                        options.sft.spectral);
  SpectralBracket window;
  if (!(inner.lower > 1.0)) {
    window = spectral_radius_of(build_approximation(hole, depth_budget, Mode::Window, options.sft),
                                options.sft.spectral);
  }
  Positivity p;
  p.depth = depth_budget;
  if (auto c = radius_certificate(inner, window, depth_budget, false)) {
    p.verdict = Verdict::Positive;
    p.certificate = std::move(c);
  }
  return p;
}

bool verify_certificate(const Hole& hole, const Certificate& c, const EstimatorOptions& options) {
  const unsigned k = hole.k();
  switch (c.kind) {
    case CertificateKind::R1Subshift: {
      if (k < 3 || c.parameter < 1) return false;
      const Hole side = c.reflected ? reflect_hole(hole) : hole;
      const Rational limit = top(k) - Rational(BigInt(1), big_pow(k, c.parameter + 1));
      return side.b() <= limit && spectral_radius(u_n_subshift(k, c.parameter).graph) > 1.0;
    }
    case CertificateKind::DigitBlock: {
      const unsigned j = c.parameter;
      if (j < 2 || j >= k) return false;
      return hole.b() <= Rational(k - j, k) || hole.a() >= Rational(j, k);
    }
    case CertificateKind::WidthBound: {
      if (!classify(hole).strict_r2()) return false;
      const Rational threshold = 1 - 2 * thue_morse_preimage_upper(k, options.thue_morse_digits);
      return c.threshold == threshold && hole.b() - hole.a() < threshold;
    }
    case CertificateKind::SubshiftRadius: {
      if (c.mode == Mode::Outer || c.parameter < 1) return false;
      Hole target = hole;
      if (c.on_reduced_hole) {
        const auto [ga, gb] = reduce_hole(hole);
        target = Hole(ga, gb, 2);
      }
      const auto b = spectral_radius_of(build_approximation(target, c.parameter, c.mode, options.sft),
                                        options.sft.spectral);
      return b.lower > 1.0;
    }
  }
  return false;
}

DimensionEstimate estimate_dimension(const Hole& hole, unsigned depth, EstimateMode mode,
                                     const EstimatorOptions& options) {
  DimensionEstimate est;
  est.region = classify(hole);
  est.depth = depth;
  const bool want_direct = mode != EstimateMode::Reduced;
  const bool want_reduced = mode != EstimateMode::Direct;
  if (want_reduced && !est.region.strict_r2()) {
    throw std::invalid_argument("reduced mode requires a < 1/k and b > (k-1)/k");
  }

  std::optional<Hole> reduced_hole;
  std::future<SurvivorAnalysis> reduced_job;
  if (want_reduced) {
    const auto [ga, gb] = reduce_hole(hole);
    est.reduced_hole = std::pair{ga, gb};
    reduced_hole.emplace(ga, gb, 2);
    reduced_job = std::async(std::launch::async, [&] { return analyze_survivors(*reduced_hole, depth, options.sft); });
  }

  std::optional<SurvivorAnalysis> direct;
  if (want_direct) {
    direct = analyze_survivors(hole, depth, options.sft);
    est.direct = to_dimension(direct->bounds, hole.k());
    est.methods.push_back("direct-sft");
  }
  std::optional<SurvivorAnalysis> reduced;
  if (want_reduced) {
    reduced = reduced_job.get();
    // d_k(a,b) = log_k 2 * d_2(g(a), g(b)), so entropies carry over unchanged
    est.reduced = to_dimension(reduced->bounds, hole.k());
    est.methods.push_back("reduced-sft");
  }

  est.lower = 0.0;
  est.upper = 1.0;
  for (const auto* b : {est.direct ? &*est.direct : nullptr, est.reduced ? &*est.reduced : nullptr}) {
    if (b == nullptr) continue;
    est.lower = std::max(est.lower, b->lower);
    est.upper = std::min(est.upper, b->upper);
  }
  if (const auto floor = digit_block_lower_bound(hole); floor && *floor > est.lower) {
    est.lower = *floor;
    est.methods.push_back("digit-block-floor");
  }
  constexpr double kSlack = 1e-9;
  if (est.lower > est.upper + kSlack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "inconsistent dimension bounds: lower " << est.lower << " > upper " << est.upper;
    throw std::logic_error(msg.str());
  }
  est.upper = std::max(est.upper, est.lower);

  if (auto structural = structural_certificate(hole, est.region, options)) {
    est.positivity = {Verdict::Positive, std::move(structural), 0};
  } else {
    est.positivity.depth = depth;
    std::optional<Certificate> c;
    if (direct) c = radius_certificate(direct->inner_radius, direct->window_radius, depth, false);
    if (!c && reduced) c = radius_certificate(reduced->inner_radius, reduced->window_radius, depth, true);
    if (c) {
      est.positivity.verdict = Verdict::Positive;
      est.positivity.certificate = std::move(c);
    }
  }
  if (est.positivity.certificate) est.methods.push_back(to_string(est.positivity.certificate->kind));
  return est;
}

}  // namespace holedim
