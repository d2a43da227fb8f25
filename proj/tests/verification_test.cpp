#include <gtest/gtest.h>

#include "eulerlab/generating_functions.hpp"
#include "eulerlab/verification.hpp"

using namespace eulerlab;

TEST(EulerExpansion, PassesForSmallShifts) {
  EXPECT_TRUE(euler_expansion_check(1, 50).passed());
  EXPECT_TRUE(euler_expansion_check(2, 50).passed());
  for (std::size_t c = 1; c <= 5; ++c) {
    const VerificationReport r = euler_expansion_check(c, 100);
    EXPECT_TRUE(r.passed()) << summarize(r);
    EXPECT_EQ(r.order, 100u);
  }
}

TEST(EulerExpansion, OrderZeroIsTrivial) {
  EXPECT_TRUE(euler_expansion_check(3, 0).passed());
}

TEST(EulerExpansion, RejectsZeroShift) {
  EXPECT_THROW(euler_expansion_check(0, 10), std::invalid_argument);
}

TEST(VerifyIdentity, AllPassAtDefaultOrder) {
  for (IdentityName name : kAllIdentities) {
    const VerificationReport r = verify_identity(name, kDefaultVerificationOrder);
    EXPECT_TRUE(r.passed()) << summarize(r);
    EXPECT_EQ(r.name, to_string(name));
  }
}

TEST(VerifyIdentity, ShiftAtSevenWithWitness) {
  EXPECT_TRUE(verify_identity(IdentityName::shift_BC, 7).passed());
  EXPECT_EQ(gf_class(PartitionClassId::C, 7)[7], 4);
  EXPECT_EQ(gf_class(PartitionClassId::B, 7)[6], 4);
}

TEST(VerifyIdentity, HalfDAtTinyOrders) {
  for (std::size_t order : {0u, 1u, 2u})
    EXPECT_TRUE(verify_identity(IdentityName::half_D, order).passed()) << order;
}

TEST(VerifyIdentity, SmallOrdersDoNotUnderflow) {
  for (IdentityName name : kAllIdentities)
    for (std::size_t order : {0u, 1u, 2u})
      EXPECT_TRUE(verify_identity(name, order).passed()) << to_string(name) << order;
}

TEST(VerifyIdentity, NameParsing) {
  for (IdentityName name : kAllIdentities)
    EXPECT_EQ(parse_identity_name(to_string(name)), name);
  EXPECT_FALSE(parse_identity_name("euler"));
}

TEST(Summarize, PassAndMismatch) {
  VerificationReport ok{"half_D", 200, std::nullopt, std::chrono::microseconds(1500)};
  EXPECT_EQ(summarize(ok), "half_D order=200 pass");
  EXPECT_EQ(summarize(ok, true), "half_D order=200 pass [1500 us]");

  VerificationReport bad{"thm_all", 10, Mismatch{4, 2, 3, "A(n) vs B(n)"}, {}};
  EXPECT_FALSE(bad.passed());
  EXPECT_EQ(summarize(bad), "thm_all order=10 FAIL at n=4 (A(n) vs B(n): 2 != 3)");
}
