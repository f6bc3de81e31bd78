#ifndef DCM_OVERLAP_HPP
#define DCM_OVERLAP_HPP

#include "dcm/dataset.hpp"

namespace dcm {

/// Per-feature range envelopes of the two classes.
struct OverlapBounds {
  std::vector<double> minmax;  // MIN(max(f,c1), max(f,c2))
  std::vector<double> maxmin;  // MAX(min(f,c1), min(f,c2))
  std::vector<double> maxmax;
  std::vector<double> minmin;
};

OverlapBounds overlap_bounds(const FeatureStats& st);

/// F1: maximum over features of (mu1-mu2)^2 / (var1+var2).
/// A feature with zero pooled variance contributes 0 when the class means
/// coincide and +infinity when they differ (perfect separator sentinel).
double f1_max_fisher(const Dataset& ds);

/// F2: product over features of the overlap-to-span ratio of the class
/// bounding boxes; zero as soon as one feature's ranges are disjoint.
/// A feature constant across both classes contributes factor 1.
double f2_overlap_volume(const Dataset& ds);

/// F3: best single-feature efficiency. A point counts as separable by a
/// feature when its value lies strictly outside the closed overlap interval
/// [MAXMIN, MINMAX] of that feature.
double f3_max_feature_efficiency(const Dataset& ds);

}  // namespace dcm

#endif
