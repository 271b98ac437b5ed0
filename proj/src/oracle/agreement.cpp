#include "cga/oracle/agreement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cga/core/basis.hpp"
#include "cga/core/error.hpp"
#include "cga/objects/objects.hpp"
#include "cga/oracle/cayley.hpp"
#include "cga/oracle/fits.hpp"
#include "cga/oracle/pair_bruteforce.hpp"
#include "cga/oracle/sampling.hpp"

namespace cga::oracle {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

class Recorder {
public:
  Recorder(std::string name, double tol) {
    report_.name = std::move(name);
    report_.tolerance = tol;
  }

  void record(double error) {
    ++report_.trials;
    if (std::isnan(error))
      error = kInfinity;
    report_.max_error = std::max(report_.max_error, error);
    if (error > report_.tolerance)
      ++report_.failures;
  }

  void fail() { record(kInfinity); }

  AgreementReport take() { return std::move(report_); }

private:
  AgreementReport report_;
};

double relative_error(const EuclidVector &a, const EuclidVector &b) {
  return norm(a - b) / std::max(1.0, norm(b));
}

double relative_error(const EuclidBivector &a, const EuclidBivector &b) {
  return norm(a - b) / std::max(1.0, norm(b));
}

double set_error(const EuclidVector &a1, const EuclidVector &a2,
                 const EuclidVector &b1, const EuclidVector &b2) {
  const double straight =
      std::max(relative_error(a1, b1), relative_error(a2, b2));
  const double crossed =
      std::max(relative_error(a1, b2), relative_error(a2, b1));
  return std::min(straight, crossed);
}

EuclidBivector unit(const EuclidBivector &b) { return b * (1.0 / norm(b)); }

// min over lambda of |a - lambda b| / |a|.
double proportionality_residual(const Multivector &a, const Multivector &b) {
  double ab = 0.0;
  for (unsigned k = 0; k < kBladeCount; ++k)
    ab += a[k] * b[k];
  const double nb = norm(b);
  if (nb == 0.0 || norm(a) == 0.0)
    return kInfinity;
  const double lambda = ab / (nb * nb);
  return norm(a - lambda * b) / norm(a);
}

ConformalPoint embed(const EuclidVector &p) { return embed_point(p); }

// One-dimensional-circle pair form with r^2 replaced by -s^2 and the 2r
// factor dropped: a pair whose points are imaginary.
Multivector virtual_pair(const EuclidVector &c, const EuclidVector &phat,
                         double s) {
  const Multivector ph = to_multivector(phat);
  const Multivector cm = to_multivector(c);
  const double c_phat = dot(c, phat);
  return (ph ^ cm) +
         0.5 * (((dot(c, c) - s * s) * ph - 2.0 * c_phat * cm) * basis::n) +
         ph * basis::nbar + c_phat * basis::minkowski;
}

} // namespace

double relative_error(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

AgreementReport cayley_agreement() {
  Recorder rec("cayley table", 0.0);
  const auto mismatches = cayley_check();
  std::size_t bad = mismatches.size();
  for (std::size_t k = 0; k < kBladeCount * kBladeCount; ++k)
    rec.record(k < bad ? 1.0 : 0.0);
  return rec.take();
}

AgreementReport embed_roundtrip(std::uint64_t seed, std::size_t trials,
                                double tol) {
  Recorder rec("embed/extract round trip", tol);
  InstanceGenerator gen(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const EuclidVector p = gen.point();
    rec.record(norm(extract_point(embed(p)) - p));
  }
  return rec.take();
}

AgreementReport pair_split_roundtrip(std::uint64_t seed, std::size_t trials,
                                     double tol) {
  Recorder rec("pair split round trip", tol);
  InstanceGenerator gen(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const auto [a, b] = k % 4 == 3 ? gen.equal_norm_pair() : gen.distinct_pair();
    try {
      const PointPair pair = k % 2 == 0 ? point_pair(embed(a), embed(b))
                                        : point_pair(embed(b), embed(a));
      const PairData data = split_point_pair(pair).data;
      rec.record(set_error(data.p1, data.p2, a, b));
    } catch (const GeometryError &) {
      rec.fail();
    }
  }
  return rec.take();
}

AgreementReport pair_split_vs_bruteforce(std::uint64_t seed,
                                         std::size_t real_trials,
                                         std::size_t virtual_trials,
                                         double tol) {
  Recorder rec("pair split vs brute-force quadratic", tol);
  InstanceGenerator gen(seed);
  for (std::size_t k = 0; k < real_trials; ++k) {
    const auto [a, b] = k % 4 == 3 ? gen.equal_norm_pair() : gen.distinct_pair();
    try {
      const PointPair pair = point_pair(embed(a), embed(b));
      const BruteForcePair brute = pair_solve_bruteforce(pair);
      if (brute.kind != PairKind::Real) {
        rec.fail();
        continue;
      }
      const PairData data = split_point_pair(pair).data;
      rec.record(set_error(data.p1, data.p2, brute.a, brute.b));
    } catch (const GeometryError &) {
      rec.fail();
    }
  }
  for (std::size_t k = 0; k < virtual_trials; ++k) {
    EuclidVector c = gen.point();
    const EuclidVector phat = gen.unit();
    if (k % 10 == 9)
      c = c - dot(c, phat) * phat;
    const double s = gen.uniform(0.1, InstanceGenerator::kExtent);
    const PointPair pair = PointPair::from_multivector(
        gen.scale_factor() * virtual_pair(c, phat, s));
    bool split_imaginary = false;
    try {
      split_point_pair(pair);
    } catch (const GeometryError &e) {
      split_imaginary = e.kind() == ErrorKind::ImaginaryPair;
    }
    const bool brute_imaginary =
        pair_solve_bruteforce(pair).kind == PairKind::Imaginary;
    rec.record(split_imaginary && brute_imaginary ? 0.0 : kInfinity);
  }
  return rec.take();
}

AgreementReport line_solution(std::uint64_t seed, std::size_t lines,
                              std::size_t alphas, double incidence_tol,
                              double moment_tol) {
  Recorder rec("line parametric solution", incidence_tol);
  InstanceGenerator gen(seed);
  for (std::size_t k = 0; k < lines; ++k) {
    const auto [a, b] = gen.distinct_pair();
    const Line line = line_through(embed(a), embed(b));
    const LineData data = line_data(line);
    const double d_sq = dot(data.d, data.d);
    for (std::size_t j = 0; j < alphas; ++j) {
      const double alpha = gen.uniform(-2.0, 2.0) * d_sq;
      const EuclidVector x = line_point(data, alpha);
      const ConformalPoint X = embed(x);
      const double ratio = norm(line.mv() ^ X.mv()) /
                           (norm(line.mv()) * norm(X.mv()));
      const double moment = relative_error(wedge(x, data.d), data.m);
      rec.record(moment > moment_tol ? kInfinity : ratio);
    }
  }
  return rec.take();
}

AgreementReport circle_vs_circumcircle(std::uint64_t seed, std::size_t trials,
                                       double tol) {
  Recorder rec("circle_data vs circumcircle", tol);
  InstanceGenerator gen(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const auto pts = gen.triangle();
    const auto fit = circumcircle(pts[0], pts[1], pts[2]);
    try {
      const CircleData data = circle_data(
          circle_through(embed(pts[0]), embed(pts[1]), embed(pts[2])));
      rec.record(std::max({relative_error(data.c, fit->c),
                           relative_error(data.r, fit->r),
                           relative_error(unit(data.Ic), fit->Ic)}));
    } catch (const GeometryError &) {
      rec.fail();
    }
  }
  return rec.take();
}

AgreementReport circle_square_identity(std::uint64_t seed,
                                       std::size_t trials, double tol) {
  Recorder rec("circle V3^2 = -r^2 Ic^2", tol);
  InstanceGenerator gen(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const auto pts = gen.triangle();
    const Circle circle =
        circle_through(embed(pts[0]), embed(pts[1]), embed(pts[2]));
    const CircleData data = circle_data(circle);
    const Multivector ic = to_multivector(data.Ic);
    const double lhs = scalar_product(circle.mv(), circle.mv());
    const double rhs = -data.r * data.r * scalar_product(ic, ic);
    rec.record(std::abs(lhs - rhs) / std::abs(lhs));
  }
  return rec.take();
}

AgreementReport sphere_vs_circumsphere(std::uint64_t seed, std::size_t trials,
                                       double tol) {
  Recorder rec("sphere_data vs circumsphere", tol);
  InstanceGenerator gen(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const auto pts = gen.tetrahedron();
    const auto fit = circumsphere(pts[0], pts[1], pts[2], pts[3]);
    try {
      const SphereData data = sphere_data(sphere_through(
          embed(pts[0]), embed(pts[1]), embed(pts[2]), embed(pts[3])));
      rec.record(std::max(relative_error(data.c, fit->c),
                          relative_error(data.r, fit->r)));
    } catch (const GeometryError &) {
      rec.fail();
    }
  }
  return rec.take();
}

AgreementReport sphere_pseudoscalar_relation(std::uint64_t seed,
                                             std::size_t trials, double tol) {
  Recorder rec("sphere i_s = r^3 (r1-r2)^(r2-r3)^(r3-r4)", tol);
  InstanceGenerator gen(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    SampledSphere spec;
    std::vector<EuclidVector> pts;
    do {
      spec = gen.sphere(4);
      pts = sphere_positions(spec, 4);
    } while (!circumsphere(pts[0], pts[1], pts[2], pts[3],
                           InstanceGenerator::kConditioning) ||
             !clears_degeneracy_threshold(pts));
    const Sphere sphere = sphere_through(embed(pts[0]), embed(pts[1]),
                                         embed(pts[2]), embed(pts[3]));
    const auto &r = spec.directions;
    const double expected = spec.r * spec.r * spec.r *
                            dot(r[0] - r[1], cross(r[1] - r[2], r[2] - r[3]));
    const Multivector is = sphere_pseudoscalar(sphere);
    rec.record(norm(is - expected * basis::i3d) /
               std::max(1.0, std::abs(expected)));
  }
  return rec.take();
}

AgreementReport plane_support_agreement(std::uint64_t seed,
                                        std::size_t trials, double tol) {
  Recorder rec("plane_data support vector", tol);
  InstanceGenerator gen(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    std::vector<EuclidVector> pts;
    const bool through_origin = k % 5 == 4;
    for (;;) {
      pts = gen.triangle();
      if (through_origin)
        pts[2] = gen.uniform(-1.0, 1.0) * pts[0] + gen.uniform(-1.0, 1.0) * pts[1];
      if (plane_support(pts[0], pts[1], pts[2],
                        InstanceGenerator::kConditioning))
        break;
    }
    const auto fit = plane_support(pts[0], pts[1], pts[2]);
    try {
      const PlaneData data = plane_data(
          plane_through(embed(pts[0]), embed(pts[1]), embed(pts[2])));
      const Multivector ip = to_multivector(data.Ip);
      const double perpendicular =
          norm(left_contraction(to_multivector(data.d), ip)) /
          (std::max(1.0, norm(data.d)) * norm(ip));
      double error = std::max(relative_error(data.d, fit->d), perpendicular);
      if (through_origin)
        error = std::max(error, norm(data.d));
      rec.record(error);
    } catch (const GeometryError &) {
      rec.fail();
    }
  }
  return rec.take();
}

AgreementReport homogeneity(std::uint64_t seed, std::size_t trials,
                            double tol) {
  Recorder rec("homogeneity under V -> lambda V", tol);
  InstanceGenerator gen(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const double lambda = gen.scale_factor();
    try {
      const EuclidVector p = gen.point();
      double error =
          relative_error(extract_point(lambda * embed(p).mv()), p);

      const auto [a, b] = k % 4 == 3 ? gen.equal_norm_pair() : gen.distinct_pair();
      const PointPair pair = point_pair(embed(a), embed(b));
      const PairData pd = split_point_pair(pair).data;
      const PairData pds =
          split_point_pair(PointPair::from_multivector(lambda * pair.mv())).data;
      error = std::max({error, relative_error(pds.p1, pd.p1),
                        relative_error(pds.p2, pd.p2),
                        relative_error(pds.r, pd.r),
                        relative_error(pds.phat, pd.phat),
                        relative_error(pds.c, pd.c)});

      const Line line = line_through(embed(a), embed(b));
      const LineData ld = line_data(line);
      const LineData lds =
          line_data(Line::from_multivector(lambda * line.mv()));
      error = std::max({error, relative_error(lds.d, lambda * ld.d),
                        relative_error(lds.m, lambda * ld.m),
                        relative_error(line_point(lds, 0.0),
                                       line_point(ld, 0.0))});

      const auto tri = gen.triangle();
      const Circle circle =
          circle_through(embed(tri[0]), embed(tri[1]), embed(tri[2]));
      const CircleData cd = circle_data(circle);
      const CircleData cds =
          circle_data(Circle::from_multivector(lambda * circle.mv()));
      error = std::max({error, relative_error(cds.c, cd.c),
                        relative_error(cds.c_par, cd.c_par),
                        relative_error(cds.c_perp, cd.c_perp),
                        relative_error(cds.r, cd.r),
                        relative_error(cds.Ic, lambda * cd.Ic)});

      const Plane plane =
          plane_through(embed(tri[0]), embed(tri[1]), embed(tri[2]));
      const PlaneData qd = plane_data(plane);
      const PlaneData qds =
          plane_data(Plane::from_multivector(lambda * plane.mv()));
      error = std::max({error, relative_error(qds.d, qd.d),
                        relative_error(qds.Ip, lambda * qd.Ip)});

      const auto tet = gen.tetrahedron();
      const Sphere sphere = sphere_through(embed(tet[0]), embed(tet[1]),
                                           embed(tet[2]), embed(tet[3]));
      const SphereData sd = sphere_data(sphere);
      const SphereData sds =
          sphere_data(Sphere::from_multivector(lambda * sphere.mv()));
      error = std::max({error, relative_error(sds.c, sd.c),
                        relative_error(sds.r, sd.r),
                        relative_error(sds.is_scale, lambda * sd.is_scale),
                        norm(sds.C.mv() - sd.C.mv()) /
                            std::max(1.0, norm(sd.C.mv()))});
      rec.record(error);
    } catch (const GeometryError &) {
      rec.fail();
    }
  }
  return rec.take();
}

AgreementReport alternative_parametrizations(std::uint64_t seed,
                                             std::size_t trials, double tol) {
  Recorder rec("alternative parametrizations", tol);
  InstanceGenerator gen(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    try {
      const auto tri = gen.triangle();
      const EuclidVector &a = tri[0];
      const EuclidVector &b = tri[1];
      const ConformalPoint pa = embed(a);
      const ConformalPoint pb = embed(b);

      // Pair as a one-dimensional circle, built from elementary data.
      PairData data;
      data.p1 = a;
      data.p2 = b;
      data.r = 0.5 * norm(a - b);
      data.phat = (a - b) / (2.0 * data.r);
      data.c = 0.5 * (a + b);
      const Multivector wedge_pair = point_pair(pa, pb).mv();
      const Multivector circle_form = pair_circle_form(data).mv();
      rec.record(same_object(circle_form, wedge_pair, tol)
                     ? proportionality_residual(circle_form, wedge_pair)
                     : kInfinity);

      // Line through any point of the carrier, not only the midpoint.
      const EuclidVector on_line = a + gen.uniform(-3.0, 3.0) * (b - a);
      const Multivector alt_line =
          line_alt_param(embed(on_line), data.phat, 2.0 * data.r).mv();
      const Multivector wedge_line = line_through(pa, pb).mv();
      rec.record(same_object(alt_line, wedge_line, tol)
                     ? proportionality_residual(alt_line, wedge_line)
                     : kInfinity);

      // Plane through any of its points with Ic = (p1 - p2) ^ (p2 - p3).
      const EuclidVector in_plane = a + gen.uniform(-2.0, 2.0) * (b - a) +
                                    gen.uniform(-2.0, 2.0) * (tri[2] - a);
      const Multivector alt_plane =
          plane_alt_param(embed(in_plane), wedge(a - b, b - tri[2])).mv();
      const Multivector wedge_plane = plane_through(pa, pb, embed(tri[2])).mv();
      rec.record(same_object(alt_plane, wedge_plane, tol)
                     ? proportionality_residual(alt_plane, wedge_plane)
                     : kInfinity);
    } catch (const GeometryError &) {
      rec.fail();
    }
  }
  return rec.take();
}

std::vector<AgreementReport> run_all(std::uint64_t seed, std::size_t iters) {
  const std::size_t virtual_trials = std::max<std::size_t>(iters / 10, 1);
  const std::size_t lines = std::max<std::size_t>(iters / 10, 1);
  return {
      cayley_agreement(),
      embed_roundtrip(seed, iters, 1e-12),
      pair_split_roundtrip(seed + 1, iters, 1e-9),
      pair_split_vs_bruteforce(seed + 2, iters, virtual_trials, 1e-9),
      line_solution(seed + 3, lines, 100, kDefaultTolerance, 1e-9),
      circle_vs_circumcircle(seed + 4, iters, 1e-9),
      circle_square_identity(seed + 5, iters, 1e-9),
      sphere_vs_circumsphere(seed + 6, iters, 1e-9),
      sphere_pseudoscalar_relation(seed + 7, iters, 1e-9),
      plane_support_agreement(seed + 8, iters, 1e-9),
      homogeneity(seed + 9, iters, 1e-9),
      alternative_parametrizations(seed + 10, std::max<std::size_t>(iters / 5, 1),
                                   1e-9),
  };
}

} // namespace cga::oracle
