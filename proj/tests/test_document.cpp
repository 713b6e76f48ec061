#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "core/document.hpp"
#include "support.hpp"

using namespace dainfty;

namespace {

json minimal_doc() {
    return json::parse(R"({
      "schema": "dainfty.structure",
      "ring": {"kind": "integers"},
      "convention": "sagave",
      "bounds": {"max_horizontal": 2, "max_arity": 4},
      "basis": [
        {"name": "a", "bidegree": [0, 0]},
        {"name": "b", "bidegree": [0, 1]}
      ],
      "maps": [
        {"i": 0, "j": 1, "entries": [
          {"input": ["a"], "output": [{"element": "b", "coeff": 1}]}
        ]}
      ]
    })");
}

}  // namespace

TEST_CASE("scalar serialization respects the 53-bit boundary") {
    BigInt safe("9007199254740991");  // 2^53 - 1
    CHECK(scalar_to_json(safe).is_number_integer());
    CHECK(scalar_to_json(-safe).is_number_integer());
    CHECK(scalar_to_json(safe + 1).is_string());
    CHECK(scalar_to_json(safe + 1).get<std::string>() == "9007199254740992");
    CHECK(scalar_to_json(-(safe + 1)).is_string());
    BigInt huge("1000000000000000000000000000000");
    CHECK(scalar_to_json(huge).get<std::string>() == huge.str());

    // both forms parse to the same value
    CHECK(scalar_from_json(json(9007199254740991LL), "$") == safe);
    CHECK(scalar_from_json(json("9007199254740991"), "$") == safe);
    CHECK(scalar_from_json(json("-12"), "$") == BigInt(-12));
    CHECK_THROWS_AS(scalar_from_json(json("12x"), "$"), DocumentError);
    CHECK_THROWS_AS(scalar_from_json(json(1.5), "$"), DocumentError);
    CHECK_THROWS_AS(scalar_from_json(json::object(), "$"), DocumentError);
}

TEST_CASE("family documents round trip byte-for-byte") {
    for (ExampleId id :
         {ExampleId::allocca_lada, ExampleId::allocca_lada_minimal,
          ExampleId::rank3_derived, ExampleId::rank3_modified_m01,
          ExampleId::rank3_truncated_bidga,
          ExampleId::rank3_truncated_bidga_m01}) {
        StructureFamily fam = build_example(id, 4);
        std::string first = dump_json(family_to_json(fam));
        StructureFamily back = family_from_json(json::parse(first));
        std::string second = dump_json(family_to_json(back));
        CHECK(first == second);
        CHECK(back.convention == fam.convention);
        CHECK(back.max_arity == fam.max_arity);
        CHECK(back.maps.size() == fam.maps.size());
    }
}

TEST_CASE("huge coefficients survive the string encoding") {
    Ring z = Ring::integers();
    StructureFamily fam;
    fam.max_horizontal = 0;
    fam.max_arity = 2;
    fam.basis.add("a", {0, 0});
    GradedMap m;
    m.arity = 2;
    m.degree = {0, 0};
    LinComb v;
    v.add({0}, BigInt("1152921504606846976"), z);  // 2^60
    m.set({0, 0}, v);
    fam.set_map(0, 2, std::move(m));

    json doc = family_to_json(fam);
    CHECK(doc["maps"][0]["entries"][0]["output"][0]["coeff"].is_string());
    StructureFamily back = family_from_json(doc);
    CHECK(back.map_at(0, 2)->apply({0, 0}).terms().begin()->second ==
          BigInt("1152921504606846976"));
}

TEST_CASE("mod-p documents normalize coefficients") {
    json doc = minimal_doc();
    doc["ring"] = {{"kind", "mod_p"}, {"p", 5}};
    doc["maps"][0]["entries"][0]["output"][0]["coeff"] = -1;
    StructureFamily fam = family_from_json(doc);
    CHECK(fam.ring.kind == Ring::Kind::mod_p);
    CHECK(fam.map_at(0, 1)->apply({0}).terms().begin()->second == 4);
    // and the round trip stays in normalized form
    json out = family_to_json(fam);
    CHECK(out["maps"][0]["entries"][0]["output"][0]["coeff"] == 4);
}

TEST_CASE("schema violations carry a JSON path") {
    auto expect_error = [](json doc, const char* needle) {
        try {
            family_from_json(doc);
            FAIL_CHECK("expected a DocumentError mentioning " << needle);
        } catch (const DocumentError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    {
        json doc = minimal_doc();
        doc["schema"] = "something.else";
        expect_error(doc, "$.schema");
    }
    {
        json doc = minimal_doc();
        doc.erase("ring");
        expect_error(doc, "missing field 'ring'");
    }
    {
        json doc = minimal_doc();
        doc["convention"] = "classical";
        expect_error(doc, "$.convention");
    }
    {
        json doc = minimal_doc();
        doc["basis"].push_back(doc["basis"][0]);
        expect_error(doc, "duplicate basis name");
    }
    {
        json doc = minimal_doc();
        doc["maps"].push_back(doc["maps"][0]);
        expect_error(doc, "duplicate map index");
    }
    {
        json doc = minimal_doc();
        doc["maps"][0]["entries"].push_back(doc["maps"][0]["entries"][0]);
        expect_error(doc, "duplicate input word");
    }
    {
        json doc = minimal_doc();
        doc["maps"][0]["entries"][0]["input"] = {"a", "a"};
        expect_error(doc, "input arity does not match j");
    }
    {
        json doc = minimal_doc();
        doc["maps"][0]["entries"][0]["input"] = {"zz"};
        expect_error(doc, "unknown basis element 'zz'");
    }
    {
        json doc = minimal_doc();
        // m_{01} must raise the vertical degree by one; a -> a does not
        doc["maps"][0]["entries"][0]["output"][0]["element"] = "a";
        expect_error(doc, "$.maps");
    }
    {
        json doc = minimal_doc();
        doc["maps"][0]["i"] = 7;
        expect_error(doc, "beyond declared bounds");
    }
    {
        json doc = minimal_doc();
        doc["bounds"]["max_arity"] = 0;
        expect_error(doc, "must be >= 1");
    }
    {
        json doc = minimal_doc();
        doc["ring"] = {{"kind", "mod_p"}, {"p", 4}};
        expect_error(doc, "$.ring.p");
    }
    {
        json doc = minimal_doc();
        doc["ring"] = {{"kind", "mod_p"}, {"p", 1}};
        expect_error(doc, "modulus must be >= 2");
    }
    {
        json doc = minimal_doc();
        doc["ring"] = {{"kind", "rationals"}};
        expect_error(doc, "unknown ring kind");
    }
}

TEST_CASE("a document with no maps is the zero family and passes") {
    json doc = minimal_doc();
    doc["maps"] = json::array();
    StructureFamily fam = family_from_json(doc);
    CHECK(check_derived_ainfinity(fam, 2, 4).pass);
}

TEST_CASE("check reports: shape, determinism, failure rendering") {
    StructureFamily fam = build_example(ExampleId::rank3_modified_m01, 6);
    CheckResult res = check_derived_ainfinity(fam, 2, 6);
    json rep1 = check_report(fam, res, "check", 2, 6);
    json rep2 = check_report(fam, check_derived_ainfinity(fam, 2, 6), "check", 2, 6);
    CHECK(dump_json(rep1) == dump_json(rep2));

    CHECK(rep1["report_version"] == 1);
    CHECK(rep1["command"] == "check");
    CHECK(rep1["convention"] == "tilde");
    CHECK(rep1["pass"] == false);
    CHECK(rep1["window"]["u_max"] == 2);
    CHECK(rep1["window"]["v_max"] == 6);

    // the (1,3) window fails on exactly u(x)u(x)w and u(x)w(x)u
    bool found = false;
    for (const auto& r : rep1["relations"]) {
        if (r["u"] != 1 || r["v"] != 3) continue;
        found = true;
        CHECK(r["pass"] == false);
        CHECK(r["failure_count"] == 2);
        REQUIRE(r["failures"].size() == 2);
        CHECK(r["failures"][0]["input"] == json::array({"u", "u", "w"}));
        CHECK(r["failures"][0]["residual"][0]["element"] == "v");
        CHECK(r["failures"][0]["residual"][0]["coeff"] == -1);
        CHECK(r["failures"][1]["input"] == json::array({"u", "w", "u"}));
        CHECK(r["failures"][1]["residual"][0]["coeff"] == 1);
    }
    CHECK(found);

    std::string text = check_report_text(rep1);
    CHECK(text.find("check: FAIL") == 0);
    CHECK(text.find("window (u=1, v=3): 2 failing input(s)") != std::string::npos);
    CHECK(text.find("u(x)u(x)w") != std::string::npos);
    CHECK(text.find("-1*v") != std::string::npos);

    // a passing family renders a one-line PASS
    StructureFamily good = build_example(ExampleId::rank3_derived, 6);
    json rep3 = check_report(good, check_derived_ainfinity(good, 2, 6),
                             "check", 2, 6);
    CHECK(check_report_text(rep3) == "check: PASS\n");
}

TEST_CASE("bar-check report shape") {
    StructureFamily fam = build_example(ExampleId::rank3_derived, 4);
    CheckResult rel = check_derived_ainfinity(fam, 2, 4);
    CheckResult tw = check_family_twisted(bar_family_from_structure(fam), 2, 4);
    json rep = bar_check_report(fam, rel, tw, 2, 4);
    CHECK(rep["report_version"] == 1);
    CHECK(rep["command"] == "bar-check");
    CHECK(rep["pass"] == true);
    CHECK(rep["relation_check"]["pass"] == true);
    CHECK(rep["twisted_check"]["pass"] == true);
    CHECK(rep["equivalence_agrees"] == true);
    std::string text = check_report_text(rep);
    CHECK(text.find("bar-check: PASS") == 0);
    CHECK(text.find("equivalence agrees: yes") != std::string::npos);
}

TEST_CASE("representation documents") {
    StructureFamily fam = build_example(ExampleId::rank3_derived, 3);
    RepFamily rep = regular_representation(fam);

    json doc = rep_to_json(rep);
    CHECK(is_representation_document(doc));
    CHECK_FALSE(is_representation_document(family_to_json(fam)));

    std::string first = dump_json(doc);
    RepFamily back = rep_from_json(json::parse(first));
    CHECK(dump_json(rep_to_json(back)) == first);
    CHECK(back.module.size() == rep.module.size());
    CHECK(back.actions.size() == rep.actions.size());

    // malformed variants
    {
        json bad = doc;
        bad.erase("module_basis");
        CHECK_THROWS_AS(rep_from_json(bad), DocumentError);
    }
    {
        json bad = doc;
        bad["actions"][0]["slot"] = 9;
        CHECK_THROWS_AS(rep_from_json(bad), DocumentError);
    }
    {
        json bad = doc;
        bad["actions"].push_back(bad["actions"][0]);
        CHECK_THROWS_AS(rep_from_json(bad), DocumentError);
    }
    {
        json bad = family_to_json(fam);
        CHECK_THROWS_AS(rep_from_json(bad), DocumentError);
    }

    // check-rep report shape
    RepCoderivationFamily F = rep_family_from_action(rep);
    RepCheckResult res = check_rep(F, 1, 3);
    json report = rep_check_report(F, res, 1, 3);
    CHECK(report["report_version"] == 1);
    CHECK(report["command"] == "check-rep");
    CHECK(report["pass"] == true);
    CHECK(report["window"]["arity_max"] == 3);
    REQUIRE(report["conditions"].size() == 6);
    CHECK(report["conditions"][0]["condition"] == "twisted");
    std::string text = check_report_text(report);
    CHECK(text.find("check-rep: PASS") == 0);
    CHECK(text.find("twisted[0]: PASS") != std::string::npos);
}

TEST_CASE("cooperad reports") {
    auto terms = cooperad_comultiplication(CooperadKind::alpha, 1, 2);
    json rep = cooperad_report(CooperadKind::alpha, 1, 2, terms);
    CHECK(rep["report_version"] == 1);
    CHECK(rep["command"] == "cooperad");
    CHECK(rep["kind"] == "alpha");
    CHECK(rep["u"] == 1);
    CHECK(rep["v"] == 2);
    REQUIRE(rep["terms"].size() == 5);
    CHECK(rep["terms"][0] ==
          json({{"sign", 1},
                {"outer", json::array({0, 1})},
                {"inners", json::array({json::array({1, 2})})}}));

    CHECK(cooperad_text(CooperadKind::alpha, 1, 2, terms) ==
          "Delta(alpha(1,2)) =\n"
          "  + alpha(0,1) o [alpha(1,2)]\n"
          "  - alpha(1,1) o [alpha(0,2)]\n"
          "  - alpha(0,2) o [alpha(0,1), alpha(1,1)]\n"
          "  - alpha(0,2) o [alpha(1,1), alpha(0,1)]\n"
          "  + alpha(1,2) o [alpha(0,1), alpha(0,1)]\n");
}
