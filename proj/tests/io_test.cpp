#include "charclass/io.hpp"
#include "charclass/presets.hpp"
#include "charclass/surface.hpp"
#include "charclass/threefold.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace charclass;

namespace {

std::string error_of(std::string_view text, Section section = Section::ChernData) {
  try {
    parse_input(text, section);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("Veronese input document") {
  const InputDocument doc = parse_input(
      R"({"kind":"threefold","chern_data":{"d":"8","xi1":"16","xi2":"32","xi01":"12","xi3":"64","xi11":"24","xi001":"4"}})");
  CHECK(doc.kind == Kind::Threefold);
  CHECK_FALSE(doc.symbolic);
  CHECK(doc.values.at("xi001") == Rational(4));
  const MapContext ctx = context_from(doc);
  CHECK(ctx.data().xi == veronese_p3().data().xi);
}

TEST_CASE("symbolic document") {
  const InputDocument doc = parse_input(R"({"kind":"surface","chern_data":"symbolic"})");
  CHECK(doc.symbolic);
  CHECK(context_from(doc).xi({0, 1}) == P("xi01"));
  CHECK(value_of(doc, "d") == P("d"));
}

TEST_CASE("rational strings") {
  const InputDocument doc = parse_input(R"({"kind":"surface","chern_data":{"d":"4","xi1":"-6/4","xi2":"+9","xi01":"3"}})");
  CHECK(doc.values.at("xi1") == Rational(-3, 2));
}

TEST_CASE("input errors name the offending location") {
  CHECK(error_of(R"({"kind":"surface","chern_data":{"d":"4"}})") == "/chern_data: missing keys xi1, xi2, xi01");
  CHECK(error_of(R"({"kind":"curve","chern_data":"symbolic"})").starts_with("/kind: unknown kind"));
  CHECK(error_of(R"({"chern_data":"symbolic"})") == "/kind: missing");
  CHECK(error_of(R"({"kind":"surface","chern_data":{"d":"4","xi1":"6","xi2":"9","xi01":"3/0"}})")
            .starts_with("/chern_data/xi01: malformed rational"));
  CHECK(error_of(R"({"kind":"surface","chern_data":{"d":4,"xi1":"6","xi2":"9","xi01":"3"}})") ==
        "/chern_data/d: rationals must be JSON strings");
  CHECK(error_of(R"({"kind":"surface","chern_data":{"d":"4","xi1":"6","xi2":"9","xi01":"3","xi3":"1"}})")
            .starts_with("/chern_data/xi3: unexpected key"));
  CHECK(error_of(R"({"kind":"surface",)").starts_with("byte "));
  CHECK(error_of(R"([1,2])") == "/: expected a JSON object");
  CHECK(error_of(R"({"kind":"surface","characters":{"d":"4"}})", Section::Characters) ==
        "/characters: missing keys eps0, C, T");
}

TEST_CASE("documents round trip") {
  for (const auto& [kind, ctx] : {std::pair{Kind::Surface, roman_surface()}, std::pair{Kind::Threefold, veronese_p3()},
                                  std::pair{Kind::Surface, smooth_surface(Rational(7, 3))}}) {
    const auto doc = chern_document(kind, ctx);
    const InputDocument back = parse_input(doc.dump());
    CHECK(back.kind == kind);
    CHECK(context_from(back).data().xi == ctx.data().xi);
  }
}

TEST_CASE("JSON scalars parse back exactly") {
  const ThreefoldCharacters ch = threefold_characters(smooth_threefold(Rational(-9, 7)));
  for (const auto& [name, value] : ch.named()) {
    INFO(name);
    const auto j = scalar_json(value);
    REQUIRE(j.is_string());
    CHECK(Polynomial(Rational::parse(j.get<std::string>())) == value);
  }
  CHECK(scalar_json(P("1/2*d - xi1")).get<std::string>() == "1/2*d - xi1");
}

TEST_CASE("report serialization") {
  ValidationReport r;
  r.add({"a", true, ""});
  r.add({"b", false, "residual 1", true});
  CHECK(r.ok());
  const auto j = report_json(r);
  CHECK(j.size() == 2);
  CHECK(j[1]["advisory"] == true);
  r.add({"c", false, "residual 2"});
  CHECK_FALSE(r.ok());
}
