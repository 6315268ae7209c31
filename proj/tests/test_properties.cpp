#include <gtest/gtest.h>

#include <cstdio>

#include "support.hpp"

namespace lt = lmi::testing;

#define LMI_PROPERTY_TEST(fn)                                              \
  TEST(Properties, fn) {                                                   \
    lt::PropertyResult r = lt::fn();                                       \
    std::printf("%s: %ld cases, %ld failures\n", r.name.c_str(), r.cases, r.failures); \
    EXPECT_GT(r.cases, 999) << r.name;                                     \
    EXPECT_EQ(r.failures, 0) << r.name << ": first failure " << r.first_failure; \
  }

LMI_PROPERTY_TEST(prop_symmetry)
LMI_PROPERTY_TEST(prop_convexity)
LMI_PROPERTY_TEST(prop_openness)
LMI_PROPERTY_TEST(prop_congruence)
LMI_PROPERTY_TEST(prop_recession_law)
LMI_PROPERTY_TEST(prop_origin_membership)
LMI_PROPERTY_TEST(prop_bounded_point)
LMI_PROPERTY_TEST(prop_localization)
LMI_PROPERTY_TEST(prop_decomposition_grid)
LMI_PROPERTY_TEST(prop_census_bounds)
