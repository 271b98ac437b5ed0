#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Randomized agreement runs between the conformal-object formulas and the
// independent oracles. Every run is seeded and reports the worst error it
// saw; a trial fails when its error exceeds the tolerance passed in.
namespace cga::oracle {

struct AgreementReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double max_error = 0.0;
  double tolerance = 0.0;

  bool passed() const { return trials > 0 && failures == 0; }
};

// |a - b| / max(1, |b|).
double relative_error(double a, double b);

AgreementReport cayley_agreement();

// extract(embed(p)) == p.
AgreementReport embed_roundtrip(std::uint64_t seed, std::size_t trials,
                                double tol);

// split(P1 ^ P2) == {p1, p2}; every fourth pair has equal norms, and the
// wedge order alternates so both orientations are exercised.
AgreementReport pair_split_roundtrip(std::uint64_t seed, std::size_t trials,
                                     double tol);

// split vs. pair_solve_bruteforce on real pairs (point sets) and virtual
// pairs (both must report imaginary). A classification mismatch counts as
// a failure with infinite error.
AgreementReport pair_split_vs_bruteforce(std::uint64_t seed,
                                         std::size_t real_trials,
                                         std::size_t virtual_trials,
                                         double tol);

// Points generated from line_data/line_point are incident with the line;
// each trial is one (line, alpha) combination. Also checks x ^ d = m.
AgreementReport line_solution(std::uint64_t seed, std::size_t lines,
                              std::size_t alphas, double incidence_tol,
                              double moment_tol);

// circle_data vs. circumcircle: centre, radius and unit plane bivector.
AgreementReport circle_vs_circumcircle(std::uint64_t seed, std::size_t trials,
                                       double tol);
// V3^2 == -r^2 Ic^2, relative to |V3^2|.
AgreementReport circle_square_identity(std::uint64_t seed,
                                       std::size_t trials, double tol);

AgreementReport sphere_vs_circumsphere(std::uint64_t seed, std::size_t trials,
                                       double tol);
// i_s == r^3 (r1 - r2) ^ (r2 - r3) ^ (r3 - r4) on sampled spheres.
AgreementReport sphere_pseudoscalar_relation(std::uint64_t seed,
                                             std::size_t trials, double tol);

// plane_data.d vs. the classical support vector, d _| Ip == 0, and every
// fifth plane passes through the origin (d must vanish).
AgreementReport plane_support_agreement(std::uint64_t seed,
                                        std::size_t trials, double tol);

// Every extraction is unchanged under V -> lambda V.
AgreementReport homogeneity(std::uint64_t seed, std::size_t trials,
                            double tol);

// One-dimensional-circle pair form, alternative line form and alternative
// plane form vs. the wedge of points, under same_object.
AgreementReport alternative_parametrizations(std::uint64_t seed,
                                             std::size_t trials, double tol);

// Everything `cga selfcheck` runs, at the standard tolerances.
std::vector<AgreementReport> run_all(std::uint64_t seed, std::size_t iters);

} // namespace cga::oracle
