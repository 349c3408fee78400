#pragma once

// Minimal DOM over expat. Only what the schema and instance readers need:
// element names, attributes, children and source line numbers.

#include <expat.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace xsdmerge::xml {

/// Separator expat places between namespace URI and local name.
inline constexpr char kNamespaceSeparator = '|';

struct Element {
  std::string ns;  // empty when namespace processing is off or unqualified
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  std::size_t line = 0;

  std::optional<std::string_view> attribute(std::string_view key) const {
    for (const auto& [k, v] : attributes) {
      if (k == key) return std::string_view(v);
    }
    return std::nullopt;
  }
};

struct ParseFailure {
  std::string message;
  std::size_t line = 0;
};

namespace detail {

struct Builder {
  XML_Parser parser = nullptr;
  bool namespaces = false;
  std::vector<Element> stack;
  std::optional<Element> root;

  static std::pair<std::string, std::string> split(const char* raw, bool ns) {
    std::string_view full(raw);
    if (!ns) return {std::string(), std::string(full)};
    auto pos = full.rfind(kNamespaceSeparator);
    if (pos == std::string_view::npos) return {std::string(), std::string(full)};
    return {std::string(full.substr(0, pos)), std::string(full.substr(pos + 1))};
  }

  static void XMLCALL on_start(void* user, const XML_Char* name, const XML_Char** atts) {
    auto* self = static_cast<Builder*>(user);
    Element el;
    std::tie(el.ns, el.name) = split(name, self->namespaces);
    el.line = static_cast<std::size_t>(XML_GetCurrentLineNumber(self->parser));
    for (std::size_t i = 0; atts[i] != nullptr; i += 2) {
      // Attribute keys keep only their local part; the XSD subset never
      // relies on qualified attributes.
      el.attributes.emplace_back(split(atts[i], self->namespaces).second, atts[i + 1]);
    }
    self->stack.push_back(std::move(el));
  }

  static void XMLCALL on_end(void* user, const XML_Char*) {
    auto* self = static_cast<Builder*>(user);
    Element done = std::move(self->stack.back());
    self->stack.pop_back();
    if (self->stack.empty()) {
      self->root = std::move(done);
    } else {
      self->stack.back().children.push_back(std::move(done));
    }
  }
};

struct ParserDeleter {
  void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};

}  // namespace detail

/// Parses a whole document. Returns the root element or a failure with the
/// expat diagnostic; never throws across the C callbacks.
inline std::pair<std::optional<Element>, ParseFailure> parse(std::string_view text, bool namespaces) {
  std::unique_ptr<XML_ParserStruct, detail::ParserDeleter> parser(
      namespaces ? XML_ParserCreateNS("UTF-8", kNamespaceSeparator) : XML_ParserCreate("UTF-8"));
  detail::Builder builder;
  builder.parser = parser.get();
  builder.namespaces = namespaces;
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(parser.get(), &detail::Builder::on_start, &detail::Builder::on_end);

  if (XML_Parse(parser.get(), text.data(), static_cast<int>(text.size()), XML_TRUE) == XML_STATUS_ERROR) {
    ParseFailure failure;
    failure.message = XML_ErrorString(XML_GetErrorCode(parser.get()));
    failure.line = static_cast<std::size_t>(XML_GetCurrentLineNumber(parser.get()));
    return {std::nullopt, std::move(failure)};
  }
  if (!builder.root) return {std::nullopt, ParseFailure{"no root element", 0}};
  return {std::move(builder.root), ParseFailure{}};
}

/// Escapes the five XML special characters for use in attribute values.
inline std::string escape(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace xsdmerge::xml
