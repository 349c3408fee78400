#include <gtest/gtest.h>

#include "xsdmerge/data_types.hpp"

namespace xsdmerge {
namespace {

TEST(MergeType, NumericChainTakesGeneral) {
  EXPECT_EQ(merge_type("byte", "int"), "int");
  EXPECT_EQ(merge_type("int", "byte"), "int");
  EXPECT_EQ(merge_type("integer", "integer"), "integer");
  EXPECT_EQ(merge_type("long", "decimal"), "decimal");
  EXPECT_EQ(merge_type("float", "double"), "double");
}

TEST(MergeType, SiblingsMeetAtCommonAncestor) {
  EXPECT_EQ(merge_type("unsignedInt", "int"), "integer");
  EXPECT_EQ(merge_type("NMTOKEN", "NCName"), "token");
}

TEST(MergeType, IncompatibleTypes) {
  try {
    merge_type("int", "date");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompatibleTypes);
  }
  EXPECT_FALSE(compatible_types("ID", "string"));
  EXPECT_FALSE(compatible_types("IDREF", "IDREFS"));
  EXPECT_FALSE(compatible_types("double", "decimal"));
  EXPECT_TRUE(compatible_types("ID", "ID"));
}

}  // namespace
}  // namespace xsdmerge
