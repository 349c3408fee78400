#pragma once

// Referenced-style XML Schema model: top-level attribute and element
// declarations, complex elements composed of element refs and attribute refs.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <unordered_map>
#include <vector>

#include "xsdmerge/error.hpp"
#include "xsdmerge/xml.hpp"

namespace xsdmerge {

inline constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema";

enum class Typology { ComplexElement, SimpleElement, Attribute };

inline std::string_view to_string(Typology t) {
  switch (t) {
    case Typology::ComplexElement: return "ComplexElement";
    case Typology::SimpleElement: return "SimpleElement";
    case Typology::Attribute: return "Attribute";
  }
  return "?";
}

inline bool is_element(Typology t) { return t != Typology::Attribute; }

/// An element or attribute declaration.
struct XComponent {
  std::string name;
  Typology typology = Typology::SimpleElement;
  std::optional<std::string> data_type;  // built-in type local name, e.g. "string"
  std::string schema_id;

  bool operator==(const XComponent&) const = default;
};

/// Orders components of one schema by (name, typology).
struct ComponentOrder {
  bool operator()(const XComponent& a, const XComponent& b) const {
    return std::tie(a.name, a.typology) < std::tie(b.name, b.typology);
  }
};

inline constexpr std::uint32_t kUnbounded = std::numeric_limits<std::uint32_t>::max();

struct ChildRef {
  std::string target;
  std::uint32_t min_occurs = 1;
  std::uint32_t max_occurs = 1;  // kUnbounded for "unbounded"

  bool operator==(const ChildRef&) const = default;
};

struct AttributeUse {
  std::string target;
  bool required = false;

  bool operator==(const AttributeUse&) const = default;
};

enum class Compositor { Sequence, All };

struct ComplexContent {
  Compositor compositor = Compositor::Sequence;
  std::vector<ChildRef> children;
  std::vector<AttributeUse> attributes;

  bool operator==(const ComplexContent&) const = default;
};

/// A parsed schema. Elements (simple or complex) and attributes live in
/// separate symbol spaces, so "code" may name both an attribute and an element.
class SchemaModel {
 public:
  SchemaModel() = default;
  explicit SchemaModel(std::string schema_id) : schema_id_(std::move(schema_id)) {}

  const std::string& schema_id() const { return schema_id_; }
  const std::vector<XComponent>& components() const { return components_; }

  /// Adds a declaration; complex elements start with empty content.
  void add(XComponent c) {
    auto& index = is_element(c.typology) ? elements_ : attributes_;
    if (index.count(c.name)) {
      throw Error(ErrorCode::ParseError, "duplicate declaration of " +
                                             std::string(is_element(c.typology) ? "element" : "attribute") +
                                             " '" + c.name + "'");
    }
    c.schema_id = schema_id_;
    index.emplace(c.name, components_.size());
    if (c.typology == Typology::ComplexElement) content_.try_emplace(c.name);
    components_.push_back(std::move(c));
  }

  const XComponent* find_element(std::string_view name) const { return lookup(elements_, name); }
  const XComponent* find_attribute(std::string_view name) const { return lookup(attributes_, name); }

  const XComponent* find(std::string_view name, Typology t) const {
    const XComponent* c = is_element(t) ? find_element(name) : find_attribute(name);
    return c != nullptr && c->typology == t ? c : nullptr;
  }

  const XComponent& require(std::string_view name, Typology t) const {
    if (const auto* c = find(name, t)) return *c;
    throw Error(ErrorCode::UnknownComponent,
                "'" + std::string(name) + "' [" + std::string(to_string(t)) + "] is not declared in schema '" +
                    schema_id_ + "'");
  }

  std::optional<std::size_t> index_of(std::string_view name, Typology t) const {
    const auto& index = is_element(t) ? elements_ : attributes_;
    auto it = index.find(std::string(name));
    if (it == index.end() || components_[it->second].typology != t) return std::nullopt;
    return it->second;
  }

  const ComplexContent& content(std::string_view complex_name) const {
    auto it = content_.find(std::string(complex_name));
    if (it == content_.end()) {
      throw Error(ErrorCode::UnknownComponent, "'" + std::string(complex_name) + "' is not a complex element");
    }
    return it->second;
  }

  ComplexContent& content(std::string_view complex_name) {
    return const_cast<ComplexContent&>(std::as_const(*this).content(complex_name));
  }

  const std::map<std::string, ComplexContent>& contents() const { return content_; }

  std::size_t count(Typology t) const {
    return static_cast<std::size_t>(
        std::count_if(components_.begin(), components_.end(), [t](const auto& c) { return c.typology == t; }));
  }

 private:
  const XComponent* lookup(const std::unordered_map<std::string, std::size_t>& index, std::string_view name) const {
    auto it = index.find(std::string(name));
    return it == index.end() ? nullptr : &components_[it->second];
  }

  std::string schema_id_;
  std::vector<XComponent> components_;
  std::unordered_map<std::string, std::size_t> elements_;
  std::unordered_map<std::string, std::size_t> attributes_;
  std::map<std::string, ComplexContent> content_;
};

inline const std::vector<std::string_view>& builtin_types() {
  static const std::vector<std::string_view> types = {
      "string", "normalizedString", "token", "language", "Name", "NCName", "ID", "IDREF", "IDREFS", "ENTITY",
      "ENTITIES", "NMTOKEN", "NMTOKENS", "anyURI", "QName", "NOTATION", "boolean", "decimal", "integer",
      "nonPositiveInteger", "negativeInteger", "long", "int", "short", "byte", "nonNegativeInteger",
      "unsignedLong", "unsignedInt", "unsignedShort", "unsignedByte", "positiveInteger", "float", "double",
      "duration", "dateTime", "time", "date", "gYearMonth", "gYear", "gMonthDay", "gDay", "gMonth", "hexBinary",
      "base64Binary", "anySimpleType"};
  return types;
}

inline bool is_builtin_type(std::string_view t) {
  const auto& types = builtin_types();
  return std::find(types.begin(), types.end(), t) != types.end();
}

inline bool is_idref_type(const std::optional<std::string>& t) { return t && (*t == "IDREF" || *t == "IDREFS"); }

/// NCName check restricted to what the serializer can emit unescaped.
inline bool is_ncname(std::string_view s) {
  if (s.empty()) return false;
  auto start_ok = [](unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; };
  auto rest_ok = [&](unsigned char c) { return start_ok(c) || std::isdigit(c) || c == '-' || c == '.'; };
  if (!start_ok(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return rest_ok(static_cast<unsigned char>(c)); });
}

namespace detail {

inline std::string_view local_part(std::string_view qname) {
  auto pos = qname.find(':');
  return pos == std::string_view::npos ? qname : qname.substr(pos + 1);
}

inline std::string where(const xml::Element& el) { return " (line " + std::to_string(el.line) + ")"; }

inline bool is_xsd(const xml::Element& el, std::string_view local) {
  return el.ns == kXsdNamespace && el.name == local;
}

inline std::uint32_t parse_occurs(std::string_view text, bool allow_unbounded, const xml::Element& el) {
  if (allow_unbounded && text == "unbounded") return kUnbounded;
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == kUnbounded) {
    throw Error(ErrorCode::ParseError, "invalid occurrence indicator '" + std::string(text) + "'" + where(el));
  }
  return value;
}

inline std::string required_name(const xml::Element& el, std::string_view key) {
  auto v = el.attribute(key);
  if (!v || !is_ncname(*v)) {
    throw Error(ErrorCode::ParseError,
                "<" + el.name + "> needs a valid '" + std::string(key) + "' attribute" + where(el));
  }
  return std::string(*v);
}

inline std::string builtin_type_of(const xml::Element& el) {
  auto raw = el.attribute("type");
  if (!raw) throw Error(ErrorCode::ParseError, "declaration without type" + where(el));
  auto t = local_part(*raw);
  if (!is_builtin_type(t)) {
    throw Error(ErrorCode::UnsupportedStyle, "only built-in data types are supported, got '" + std::string(*raw) +
                                                 "'" + where(el));
  }
  return std::string(t);
}

inline bool is_annotation(const xml::Element& el) { return is_xsd(el, "annotation"); }

inline void parse_particles(const xml::Element& group, ComplexContent& content) {
  for (const auto& child : group.children) {
    if (is_annotation(child)) continue;
    if (!is_xsd(child, "element")) {
      throw Error(ErrorCode::UnsupportedStyle, "nested <" + child.name + "> inside <" + group.name + ">" +
                                                   where(child));
    }
    auto ref = child.attribute("ref");
    if (!ref) {
      throw Error(ErrorCode::UnsupportedStyle, "inline element declaration inside <" + group.name + ">" +
                                                   where(child));
    }
    ChildRef r;
    r.target = std::string(local_part(*ref));
    if (auto v = child.attribute("minOccurs")) r.min_occurs = parse_occurs(*v, false, child);
    if (auto v = child.attribute("maxOccurs")) r.max_occurs = parse_occurs(*v, true, child);
    if (r.max_occurs == 0 || r.min_occurs > r.max_occurs) {
      throw Error(ErrorCode::ParseError, "minOccurs exceeds maxOccurs for ref '" + r.target + "'" + where(child));
    }
    if (!child.children.empty() &&
        !std::all_of(child.children.begin(), child.children.end(), [](const auto& c) { return is_annotation(c); })) {
      throw Error(ErrorCode::UnsupportedStyle, "element ref with content" + where(child));
    }
    content.children.push_back(std::move(r));
  }
}

inline ComplexContent parse_complex_type(const xml::Element& type) {
  ComplexContent content;
  bool have_group = false;
  for (const auto& child : type.children) {
    if (is_annotation(child)) continue;
    if (is_xsd(child, "sequence") || is_xsd(child, "all")) {
      if (have_group) throw Error(ErrorCode::UnsupportedStyle, "more than one model group" + where(child));
      have_group = true;
      content.compositor = child.name == "all" ? Compositor::All : Compositor::Sequence;
      parse_particles(child, content);
    } else if (is_xsd(child, "attribute")) {
      auto ref = child.attribute("ref");
      if (!ref) throw Error(ErrorCode::UnsupportedStyle, "inline attribute declaration" + where(child));
      AttributeUse use;
      use.target = std::string(local_part(*ref));
      if (auto u = child.attribute("use")) {
        if (*u == "required") {
          use.required = true;
        } else if (*u == "prohibited") {
          throw Error(ErrorCode::UnsupportedStyle, "prohibited attribute use" + where(child));
        } else if (*u != "optional") {
          throw Error(ErrorCode::ParseError, "invalid use '" + std::string(*u) + "'" + where(child));
        }
      }
      content.attributes.push_back(std::move(use));
    } else {
      throw Error(ErrorCode::UnsupportedStyle, "unsupported <" + child.name + "> in complexType" + where(child));
    }
  }
  return content;
}

}  // namespace detail

/// Throws `code` describing the first broken model invariant, if any.
inline void check_invariants(const SchemaModel& model, ErrorCode code);

/// Parses referenced-style schema text.
inline SchemaModel parse_schema(std::string_view schema_text, std::string schema_id) {
  using namespace detail;
  auto [root, failure] = xml::parse(schema_text, /*namespaces=*/true);
  if (!root) {
    throw Error(ErrorCode::ParseError, failure.message + " (line " + std::to_string(failure.line) + ")");
  }
  if (!is_xsd(*root, "schema")) throw Error(ErrorCode::ParseError, "document element is not xs:schema");

  SchemaModel model(std::move(schema_id));
  std::vector<std::pair<std::string, ComplexContent>> pending;
  for (const auto& decl : root->children) {
    if (is_annotation(decl)) continue;
    if (is_xsd(decl, "attribute")) {
      model.add(XComponent{required_name(decl, "name"), Typology::Attribute, builtin_type_of(decl), {}});
    } else if (is_xsd(decl, "element")) {
      auto name = required_name(decl, "name");
      std::vector<const xml::Element*> body;
      for (const auto& c : decl.children) {
        if (!is_annotation(c)) body.push_back(&c);
      }
      if (decl.attribute("type")) {
        if (!body.empty()) throw Error(ErrorCode::ParseError, "element with both type and content" + where(decl));
        model.add(XComponent{name, Typology::SimpleElement, builtin_type_of(decl), {}});
      } else if (body.size() == 1 && is_xsd(*body.front(), "complexType")) {
        model.add(XComponent{name, Typology::ComplexElement, std::nullopt, {}});
        pending.emplace_back(name, parse_complex_type(*body.front()));
      } else {
        throw Error(ErrorCode::UnsupportedStyle, "element '" + name + "' has neither a type nor a complexType" +
                                                     where(decl));
      }
    } else {
      throw Error(ErrorCode::UnsupportedStyle, "unsupported top-level <" + decl.name + ">" + where(decl));
    }
  }
  for (auto& [name, content] : pending) {
    for (const auto& r : content.children) {
      if (!model.find_element(r.target)) {
        throw Error(ErrorCode::DanglingReference, "element '" + name + "' refers to undeclared element '" +
                                                      r.target + "'");
      }
    }
    for (const auto& a : content.attributes) {
      if (!model.find_attribute(a.target)) {
        throw Error(ErrorCode::DanglingReference, "element '" + name + "' refers to undeclared attribute '" +
                                                      a.target + "'");
      }
    }
    model.content(name) = std::move(content);
  }
  return model;
}

inline std::vector<XComponent> xcomponents(const SchemaModel& model) { return model.components(); }

inline std::vector<const XComponent*> unreferenced_complex(const SchemaModel& model) {
  std::set<std::string> referenced;
  for (const auto& [name, content] : model.contents()) {
    for (const auto& r : content.children) referenced.insert(r.target);
  }
  std::vector<const XComponent*> out;
  for (const auto& c : model.components()) {
    if (c.typology == Typology::ComplexElement && !referenced.count(c.name)) out.push_back(&c);
  }
  return out;
}

/// The unique complex element no other element refers to.
inline const XComponent& root_element(const SchemaModel& model) {
  auto roots = unreferenced_complex(model);
  if (roots.size() != 1) {
    throw Error(ErrorCode::AmbiguousRoot,
                "expected exactly one unreferenced complex element, found " + std::to_string(roots.size()));
  }
  return *roots.front();
}

inline void check_invariants(const SchemaModel& model, ErrorCode code) {
  auto fail = [code](const std::string& msg) { throw Error(code, msg); };
  for (const auto& c : model.components()) {
    if (!is_ncname(c.name)) fail("invalid name '" + c.name + "'");
    bool complex = c.typology == Typology::ComplexElement;
    if (complex == c.data_type.has_value()) fail("data type presence is wrong for '" + c.name + "'");
    if (c.data_type && !is_builtin_type(*c.data_type)) fail("unknown data type '" + *c.data_type + "'");
  }
  for (const auto& [name, content] : model.contents()) {
    if (!model.find(name, Typology::ComplexElement)) fail("content attached to non-complex '" + name + "'");
    for (const auto& r : content.children) {
      if (!model.find_element(r.target)) fail("dangling element ref '" + r.target + "' in '" + name + "'");
      if (r.max_occurs == 0 || r.min_occurs > r.max_occurs) fail("bad occurrence range on '" + r.target + "'");
    }
    for (const auto& a : content.attributes) {
      if (!model.find_attribute(a.target)) fail("dangling attribute ref '" + a.target + "' in '" + name + "'");
    }
  }
  auto roots = unreferenced_complex(model);
  if (roots.size() != 1) fail("expected exactly one root, found " + std::to_string(roots.size()));
}

namespace detail {

inline void write_occurs(std::ostream& out, const ChildRef& r) {
  if (r.min_occurs != 1) out << " minOccurs=\"" << r.min_occurs << '"';
  if (r.max_occurs != 1) {
    out << " maxOccurs=\"";
    if (r.max_occurs == kUnbounded) {
      out << "unbounded";
    } else {
      out << r.max_occurs;
    }
    out << '"';
  }
}

inline void write_complex(std::ostream& out, const std::string& name, const ComplexContent& content) {
  out << "    <xs:element name=\"" << name << "\">\n";
  out << "        <xs:complexType>\n";
  if (!content.children.empty()) {
    const char* group = content.compositor == Compositor::All ? "xs:all" : "xs:sequence";
    out << "            <" << group << ">\n";
    for (const auto& r : content.children) {
      out << "                <xs:element ref=\"" << r.target << '"';
      write_occurs(out, r);
      out << "/>\n";
    }
    out << "            </" << group << ">\n";
  }
  for (const auto& a : content.attributes) {
    out << "            <xs:attribute ref=\"" << a.target << '"' << (a.required ? " use=\"required\"" : "")
        << "/>\n";
  }
  out << "        </xs:complexType>\n";
  out << "    </xs:element>\n";
}

}  // namespace detail

/// Writes the model as referenced-style schema text: attributes, simple
/// elements, complex elements, then the root.
inline std::string serialize_schema(const SchemaModel& model) {
  check_invariants(model, ErrorCode::SerializeError);
  const auto& root = root_element(model);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<xs:schema xmlns:xs=\"" << kXsdNamespace << "\">\n";
  auto section = [&](Typology t, std::string_view title) {
    bool first = true;
    for (const auto& c : model.components()) {
      if (c.typology != t || (t == Typology::ComplexElement && c.name == root.name)) continue;
      if (first) out << "    <!-- Definition of " << title << " -->\n";
      first = false;
      if (t == Typology::ComplexElement) {
        detail::write_complex(out, c.name, model.content(c.name));
      } else {
        out << "    <xs:" << (t == Typology::Attribute ? "attribute" : "element") << " name=\"" << c.name
            << "\" type=\"xs:" << *c.data_type << "\"/>\n";
      }
    }
  };
  section(Typology::Attribute, "attributes");
  section(Typology::SimpleElement, "simple elements");
  section(Typology::ComplexElement, "complex elements");
  out << "    <!-- Definition of root element -->\n";
  detail::write_complex(out, root.name, model.content(root.name));
  out << "</xs:schema>\n";
  return out.str();
}

/// Differences between two models, ignoring schema ids and declaration
/// order. Child sequences are compared in order, attribute uses as sets.
inline std::vector<std::string> structural_diff(const SchemaModel& a, const SchemaModel& b) {
  std::vector<std::string> diffs;
  auto key = [](const XComponent& c) { return std::make_pair(is_element(c.typology), c.name); };
  std::map<std::pair<bool, std::string>, const XComponent*> left, right;
  for (const auto& c : a.components()) left[key(c)] = &c;
  for (const auto& c : b.components()) right[key(c)] = &c;

  auto describe = [](const XComponent& c) {
    return c.name + " [" + std::string(to_string(c.typology)) + (c.data_type ? ", " + *c.data_type : "") + "]";
  };
  for (const auto& [k, c] : left) {
    auto it = right.find(k);
    if (it == right.end()) {
      diffs.push_back("only in first: " + describe(*c));
    } else if (c->typology != it->second->typology || c->data_type != it->second->data_type) {
      diffs.push_back("declaration differs: " + describe(*c) + " vs " + describe(*it->second));
    }
  }
  for (const auto& [k, c] : right) {
    if (!left.count(k)) diffs.push_back("only in second: " + describe(*c));
  }

  auto ref_text = [](const ChildRef& r) {
    return r.target + "(" + std::to_string(r.min_occurs) + ".." +
           (r.max_occurs == kUnbounded ? std::string("unbounded") : std::to_string(r.max_occurs)) + ")";
  };
  for (const auto& [name, ca] : a.contents()) {
    auto it = b.contents().find(name);
    if (it == b.contents().end()) continue;
    const auto& cb = it->second;
    // Without children the compositor is not observable.
    const bool has_children = !ca.children.empty() || !cb.children.empty();
    if (has_children && ca.compositor != cb.compositor) diffs.push_back(name + ": compositor differs");
    const auto n = std::max(ca.children.size(), cb.children.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::string x = i < ca.children.size() ? ref_text(ca.children[i]) : "-";
      std::string y = i < cb.children.size() ? ref_text(cb.children[i]) : "-";
      if (x != y) diffs.push_back(name + ": child " + std::to_string(i) + " " + x + " vs " + y);
    }
    // Attribute order carries no meaning.
    auto uses = [](const std::vector<AttributeUse>& v) {
      std::map<std::string, bool> out;
      for (const auto& u : v) out[u.target] = u.required;
      return out;
    };
    const auto ua = uses(ca.attributes);
    const auto ub = uses(cb.attributes);
    auto use_text = [](const std::map<std::string, bool>& m, const std::string& target) {
      auto it = m.find(target);
      return it == m.end() ? std::string("absent") : it->second ? std::string("required") : std::string("optional");
    };
    std::set<std::string> targets;
    for (const auto& [t, r] : ua) targets.insert(t);
    for (const auto& [t, r] : ub) targets.insert(t);
    for (const auto& t : targets) {
      if (use_text(ua, t) != use_text(ub, t)) {
        diffs.push_back(name + ": attribute " + t + " " + use_text(ua, t) + " vs " + use_text(ub, t));
      }
    }
  }
  return diffs;
}

inline bool structurally_equal(const SchemaModel& a, const SchemaModel& b) { return structural_diff(a, b).empty(); }

}  // namespace xsdmerge
