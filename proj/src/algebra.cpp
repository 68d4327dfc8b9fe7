#include "alglab/identities.hpp"
#include "alglab/metric.hpp"
#include "alglab/rank4.hpp"

// Explicit instantiations for the two scalar modes keep the template-heavy
// headers out of every translation unit's compile.
namespace alglab {

template class Mat<Rat>;
template class Mat<double>;
template class Algebra<Rat>;
template class Algebra<double>;
template class Rank4<Rat>;
template class Rank4<double>;

template Algebra<Rat> derived_algebra<Rat>(const Algebra<Rat>&, DerivedKind);
template Algebra<double> derived_algebra<double>(const Algebra<double>&, DerivedKind);
template Mat<Rat> killing_form<Rat>(const Algebra<Rat>&);
template Mat<double> killing_form<double>(const Algebra<double>&);
template MetricReport check_metric<Rat>(const Algebra<Rat>&, const Mat<Rat>&);
template MetricReport check_metric<double>(const Algebra<double>&, const Mat<double>&);
template Metrized<Rat> make_metrized<Rat>(Algebra<Rat>, Mat<Rat>, bool);
template Metrized<double> make_metrized<double>(Algebra<double>, Mat<double>, bool);
template Metrized<Rat> compose<Rat>(ComposeKind, const Metrized<Rat>&, const Metrized<Rat>&);
template Metrized<double> compose<double>(ComposeKind, const Metrized<double>&,
                                          const Metrized<double>&);

template DefectReport check_identity<Rat>(const Algebra<Rat>&, IdentityName);
template DefectReport check_identity<double>(const Algebra<double>&, IdentityName);
template Mat<Rat> curvature<Rat>(const Algebra<Rat>&, CurvatureSide, const Vec<Rat>&,
                                 const Vec<Rat>&);
template Mat<double> curvature<double>(const Algebra<double>&, CurvatureSide, const Vec<double>&,
                                       const Vec<double>&);
template Rank4<Rat> curvature_flat<Rat>(const Metrized<Rat>&);
template Rank4<double> curvature_flat<double>(const Metrized<double>&);
template Rank4<Rat> kulkarni<Rat>(const Mat<Rat>&);
template Rank4<double> kulkarni<double>(const Mat<double>&);
template std::pair<Rank4<Rat>, Rank4<Rat>> project_curvature<Rat>(const Rank4<Rat>&);
template std::pair<Rank4<double>, Rank4<double>> project_curvature<double>(const Rank4<double>&);

}  // namespace alglab
