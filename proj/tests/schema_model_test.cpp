#include <gtest/gtest.h>

#include "test_support.hpp"

namespace xsdmerge {
namespace {

using testing::load_fixture;
using testing::read_fixture;

std::string wrap(const std::string& body) {
  return "<xs:schema xmlns:xs=\"http://www.w3.org/2001/XMLSchema\">" + body + "</xs:schema>";
}

ErrorCode parse_error_code(const std::string& text) {
  try {
    parse_schema(text, "T");
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a parse failure";
  return ErrorCode::IoError;
}

TEST(ParseSchema, FirstSchemaCounts) {
  auto s1 = load_fixture("s1.xsd", "S1");
  EXPECT_EQ(s1.components().size(), 24U);
  EXPECT_EQ(s1.count(Typology::Attribute), 5U);
  EXPECT_EQ(s1.count(Typology::SimpleElement), 13U);
  EXPECT_EQ(s1.count(Typology::ComplexElement), 6U);
  EXPECT_EQ(root_element(s1).name, "shop");
}

TEST(ParseSchema, SecondSchemaCounts) {
  auto s2 = load_fixture("s2.xsd", "S2");
  EXPECT_EQ(s2.components().size(), 24U);
  EXPECT_EQ(s2.count(Typology::Attribute), 7U);
  EXPECT_EQ(s2.count(Typology::SimpleElement), 10U);
  EXPECT_EQ(s2.count(Typology::ComplexElement), 7U);
  EXPECT_EQ(root_element(s2).name, "store");
}

TEST(ParseSchema, ContentModelDetails) {
  auto s1 = load_fixture("s1.xsd", "S1");
  const auto& customer = s1.content("customer");
  ASSERT_EQ(customer.children.size(), 8U);
  EXPECT_EQ(customer.children[6], (ChildRef{"bookAcquirement", 0, kUnbounded}));
  ASSERT_EQ(customer.attributes.size(), 1U);
  EXPECT_EQ(customer.attributes[0], (AttributeUse{"SSN", true}));
  EXPECT_EQ(s1.require("pubYear", Typology::SimpleElement).data_type, "integer");
  EXPECT_EQ(s1.require("code", Typology::Attribute).data_type, "ID");
}

TEST(ParseSchema, ElementAndAttributeSpacesAreSeparate) {
  auto m = parse_schema(wrap(R"(<xs:attribute name="code" type="xs:ID"/>
      <xs:element name="code" type="xs:string"/>
      <xs:element name="r"><xs:complexType><xs:sequence><xs:element ref="code"/></xs:sequence>
      <xs:attribute ref="code"/></xs:complexType></xs:element>)"),
                        "T");
  EXPECT_NE(m.find("code", Typology::Attribute), nullptr);
  EXPECT_NE(m.find("code", Typology::SimpleElement), nullptr);
}

TEST(ParseSchema, InlineComplexTypeIsUnsupported) {
  EXPECT_EQ(parse_error_code(wrap(R"(<xs:element name="r"><xs:complexType><xs:sequence>
      <xs:element name="inner" type="xs:string"/></xs:sequence></xs:complexType></xs:element>)")),
            ErrorCode::UnsupportedStyle);
}

TEST(ParseSchema, NamedTypesAreUnsupported) {
  EXPECT_EQ(parse_error_code(wrap(R"(<xs:complexType name="T"/>)")), ErrorCode::UnsupportedStyle);
}

TEST(ParseSchema, DanglingReference) {
  EXPECT_EQ(parse_error_code(wrap(R"(<xs:element name="r"><xs:complexType><xs:sequence>
      <xs:element ref="missing"/></xs:sequence></xs:complexType></xs:element>)")),
            ErrorCode::DanglingReference);
}

TEST(ParseSchema, MalformedXml) { EXPECT_EQ(parse_error_code("<xs:schema"), ErrorCode::ParseError); }

TEST(ParseSchema, BadOccurs) {
  EXPECT_EQ(parse_error_code(wrap(R"(<xs:element name="a" type="xs:string"/>
      <xs:element name="r"><xs:complexType><xs:sequence>
      <xs:element ref="a" minOccurs="2" maxOccurs="1"/></xs:sequence></xs:complexType></xs:element>)")),
            ErrorCode::ParseError);
}

TEST(ParseSchema, DuplicateDeclaration) {
  EXPECT_EQ(parse_error_code(wrap(R"(<xs:element name="a" type="xs:string"/>
      <xs:element name="a" type="xs:int"/>)")),
            ErrorCode::ParseError);
}

TEST(RootElement, AmbiguousWhenTwoUnreferenced) {
  auto m = parse_schema(wrap(R"(<xs:element name="a"><xs:complexType/></xs:element>
      <xs:element name="b"><xs:complexType/></xs:element>)"),
                        "T");
  EXPECT_EQ(unreferenced_complex(m).size(), 2U);
  try {
    root_element(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AmbiguousRoot);
  }
}

TEST(Serialize, RoundTripsFixtures) {
  for (const char* name : {"s1.xsd", "s2.xsd", "sg_reference.xsd"}) {
    auto m = load_fixture(name, "T");
    auto again = parse_schema(serialize_schema(m), "T");
    EXPECT_TRUE(structurally_equal(m, again)) << name;
  }
}

TEST(Serialize, OccursOnlyWhenNotOne) {
  auto text = serialize_schema(load_fixture("s1.xsd", "S1"));
  EXPECT_NE(text.find(R"(<xs:element ref="artist" maxOccurs="unbounded"/>)"), std::string::npos);
  EXPECT_NE(text.find(R"(<xs:element ref="title"/>)"), std::string::npos);
  EXPECT_NE(text.find(R"(<xs:attribute ref="SSN" use="required"/>)"), std::string::npos);
}

TEST(StructuralDiff, ReportsChangedIndicator) {
  auto a = load_fixture("s1.xsd", "S1");
  auto b = a;
  b.content("customer").children[0].min_occurs = 0;
  auto diff = structural_diff(a, b);
  ASSERT_EQ(diff.size(), 1U);
  EXPECT_NE(diff[0].find("customer"), std::string::npos);
}

}  // namespace
}  // namespace xsdmerge
