#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "gpdx/document.hpp"
#include "gpdx/equiv.hpp"
#include "gpdx/error.hpp"
#include "gpdx/fixtures.hpp"

using namespace gpdx;

namespace {

  ErrorKind error_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::parse_error;
  }

  std::string message_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.what();
    }
    return {};
  }

  std::string reserialize(std::string const& text) {
    auto const d = io::parse(text);
    switch (io::kind_of(d)) {
      case io::Kind::groupoid: return io::serialize(io::build(std::get<GroupoidData>(d)).value());
      case io::Kind::xmod: return io::serialize(io::build(std::get<XModData>(d)).value());
      case io::Kind::dgpd: return io::serialize(io::build(std::get<DGpdData>(d)).value());
      case io::Kind::sub_witness: return io::serialize(std::get<io::SubDocument>(d));
      case io::Kind::morphism: {
        auto const m = io::resolve_morphism(std::get<io::MorphismDocument>(d));
        return std::visit([](auto const& f) { return io::serialize(f); }, m);
      }
    }
    return {};
  }

  std::string const c2_text = R"({
  "arrows": [
    {"dst": "o", "id": "0", "src": "o"},
    {"dst": "o", "id": "1", "src": "o"}
  ],
  "compose": [
    ["0", "0", "0"],
    ["0", "1", "1"],
    ["1", "0", "1"],
    ["1", "1", "0"]
  ],
  "identities": {"o": "0"},
  "kind": "groupoid",
  "objects": ["o"],
  "version": 1
}
)";

}  // namespace

TEST_CASE("C2 serializes to the expected canonical text", "[io]") {
  CHECK(io::serialize(fixtures::cyclic(2)) == c2_text);
  CHECK(reserialize(c2_text) == c2_text);
  CHECK(io::read_groupoid(c2_text) == fixtures::cyclic(2));
}

TEST_CASE("serialize after parse is the identity on every structure kind", "[io]") {
  std::vector<std::string> docs{
      io::serialize(fixtures::symmetric(3)),
      io::serialize(fixtures::interval()),
      io::serialize(fixtures::discrete(3)),
      io::serialize(FiniteGroupoid{}),
      io::serialize(fixtures::disjoint_union(fixtures::cyclic(2), fixtures::cyclic(3))),
      io::serialize(fixtures::identity_xmod(fixtures::symmetric(3))),
      io::serialize(fixtures::conj_xmod(fixtures::cyclic(4), "mult:2")),
      io::serialize(shell_dgpd(fixtures::cyclic(2), false)),
      io::serialize(shell_dgpd(fixtures::interval(), true)),
      io::serialize(lambda(fixtures::cyclic_xmod(2, 2, 0)).dgpd),
      io::serialize(io::to_document(fixtures::named_sub(fixtures::cyclic(4), "mult:2"))),
      io::serialize(roundtrip_xmod(fixtures::identity_xmod(fixtures::cyclic(2))).map),
      io::serialize(roundtrip_dgpd(shell_dgpd(fixtures::cyclic(2), true)).map),
      io::serialize(identity_morphism(fixtures::interval())),
  };
  for (auto const& text : docs) {
    CHECK(reserialize(text) == text);
  }
}

TEST_CASE("a dangling arrow id is a parse error naming the id", "[io]") {
  auto text = c2_text;
  text.replace(text.find(R"(["1", "1", "0"])"), 15, R"(["1", "7", "0"])");
  auto const read = [&] { (void)io::read_groupoid(text); };
  CHECK(error_of(read) == ErrorKind::parse_error);
  CHECK(message_of(read).find("\"7\"") != std::string::npos);
}

TEST_CASE("malformed documents", "[io]") {
  CHECK(error_of([] { (void)io::parse("{\"kind\": "); }) == ErrorKind::parse_error);
  CHECK(message_of([] { (void)io::parse("{\n\"kind\": }"); }).find("line 2") != std::string::npos);
  CHECK(error_of([] { (void)io::parse(R"({"kind": "monoid", "version": 1})"); })
        == ErrorKind::unknown_kind);

  auto extra = c2_text;
  extra.replace(extra.find("\"version\""), 9, "\"colour\": 3, \"version\"");
  CHECK(error_of([&] { (void)io::parse(extra); }) == ErrorKind::parse_error);
  CHECK(message_of([&] { (void)io::parse(extra); }).find("colour") != std::string::npos);

  auto wrong_type = c2_text;
  wrong_type.replace(wrong_type.find("[\"o\"]"), 5, "\"o\"");
  CHECK(error_of([&] { (void)io::parse(wrong_type); }) == ErrorKind::parse_error);

  auto version = c2_text;
  version.replace(version.find("\"version\": 1"), 12, "\"version\": 2");
  CHECK(error_of([&] { (void)io::parse(version); }) == ErrorKind::parse_error);
}

TEST_CASE("a document of the wrong kind is rejected", "[io]") {
  auto const text = io::serialize(fixtures::identity_xmod(fixtures::cyclic(2)));
  CHECK(error_of([&] { (void)io::read_groupoid(text); }) == ErrorKind::unknown_kind);
}

TEST_CASE("an invalid table is an axiom violation with a report", "[io]") {
  auto text = c2_text;
  text.replace(text.find(R"(["1", "1", "0"])"), 15, R"(["1", "1", "1"])");
  try {
    (void)io::read_groupoid(text);
    FAIL("expected axiom_violation");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::axiom_violation);
    REQUIRE(e.report().has_value());
    CHECK_FALSE(e.report()->passed("inverse-law"));
  }
}

TEST_CASE("lambda(X2) serializes with 16 square records", "[io]") {
  auto const text = io::serialize(lambda(fixtures::identity_xmod(fixtures::cyclic(2))).dgpd);
  auto const j    = nlohmann::json::parse(text);
  CHECK(j["kind"] == "dgpd");
  CHECK(j["squares"].size() == 16);
  CHECK(j["thin"].size() == 8);
  CHECK(j["squares"][0]["id"] == "(0;0,0,0,0)");
}

TEST_CASE("canonical output is sorted and stable", "[io]") {
  auto const a = io::serialize(shell_dgpd(fixtures::symmetric(3), true));
  auto const b = io::serialize(shell_dgpd(fixtures::symmetric(3), true));
  CHECK(a == b);
  auto const j = nlohmann::json::parse(a);
  std::vector<std::string> ids;
  for (auto const& s : j["squares"]) {
    ids.push_back(s["id"]);
  }
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(a.back() == '\n');
}

TEST_CASE("sub documents resolve against their parent", "[io]") {
  auto const g = fixtures::cyclic(4);
  auto const d = std::get<io::SubDocument>(io::parse(
      io::serialize(io::to_document(fixtures::named_sub(g, "mult:2")))));
  auto const w = io::resolve_sub(g, d);
  CHECK(w.is_normal);

  CHECK(error_of([&] { (void)io::resolve_sub(fixtures::identity_xmod(g), d); })
        == ErrorKind::unknown_kind);

  io::SubDocument bad = d;
  bad.arrows.push_back("9");
  CHECK(error_of([&] { (void)io::resolve_sub(g, bad); }) == ErrorKind::parse_error);
}

TEST_CASE("morphism documents with broken maps report the failure", "[io]") {
  auto rt   = roundtrip_xmod(fixtures::identity_xmod(fixtures::cyclic(4)));
  auto text = io::serialize(rt.map);
  auto j    = nlohmann::json::parse(text);
  j["total"]["1"] = j["total"]["3"];
  try {
    (void)io::resolve_morphism(std::get<io::MorphismDocument>(io::parse(j.dump())));
    FAIL("expected axiom_violation");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::axiom_violation);
  }
}

TEST_CASE("pretty output is a readable listing", "[io]") {
  auto const p = io::serialize(fixtures::cyclic(2), io::Format::pretty);
  CHECK(p.starts_with("groupoid: 1 objects, 2 arrows"));
  CHECK(error_of([&] { (void)io::parse(p); }) == ErrorKind::parse_error);
  auto const q = io::serialize(shell_dgpd(fixtures::cyclic(2), false), io::Format::pretty);
  CHECK(q.find("(0,1,1,0)") != std::string::npos);
}

TEST_CASE("FNV-1a reference values", "[io]") {
  CHECK(io::fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(io::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(io::fnv1a("foobar") == 0x85944171f73967e8ULL);
}
