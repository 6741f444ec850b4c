#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "vword/demonstrative.hpp"
#include "vword/elements.hpp"

using namespace vword;

namespace {

BinaryWord w(const char* bits) { return BinaryWord(bits); }

std::vector<GroupWord> powers(const std::string& name, std::size_t max_k) {
    std::vector<GroupWord> out;
    GroupWord word;
    for (std::size_t k = 1; k <= max_k; ++k) {
        word.push_back({name, false});
        out.push_back(word);
    }
    return out;
}

}  // namespace

TEST_CASE("the embedding passes the node check at 0") {
    const auto words = modular::enumerate_normal_forms(5);
    const auto report =
        check_demonstration_node(modular::psi_generators(), w("0"), words);
    CHECK(report.ok());
    CHECK(report.checked == 33);  // 3+4+6+8+12
    CHECK(report.max_len == 5);
    CHECK(report.node == w("0"));
    CHECK(report.str() == "node=0 max_len=5 checked=33\n");
}

TEST_CASE("any extension of a passing node passes against the same words") {
    const auto words = modular::enumerate_normal_forms(5);
    const auto report =
        check_demonstration_node(modular::psi_generators(), w("00"), words);
    CHECK(report.ok());
}

TEST_CASE("powers of the shift-like element avoid its node") {
    const GeneratorMap gm{{"g", element_z()}};
    const auto report = check_demonstration_node(gm, w("0"), powers("g", 8));
    CHECK(report.ok());
    CHECK(report.checked == 8);
    CHECK(report.max_len == 8);
}

TEST_CASE("the identity violates every node") {
    const GeneratorMap gm{{"g", Prm::identity()}};
    const std::vector<GroupWord> words{GroupWord{{"g", false}}};
    const auto report = check_demonstration_node(gm, w("0"), words);
    CHECK_FALSE(report.ok());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].word == words[0]);
    CHECK(report.violations[0].witness == w("0"));
    CHECK(report.str() == "node=0 max_len=1 checked=1\ng\t0\n");
}

TEST_CASE("violations are ordered by length, then lexicographically") {
    const GeneratorMap gm{{"g", Prm::identity()}, {"h", Prm::identity()}};
    const std::vector<GroupWord> words{
        parse_word("h g"), parse_word("h"), parse_word("g")};
    const auto report = check_demonstration_node(gm, w("0"), words);
    REQUIRE(report.violations.size() == 3);
    CHECK(render_word(report.violations[0].word) == "g");
    CHECK(render_word(report.violations[1].word) == "h");
    CHECK(render_word(report.violations[2].word) == "h g");
}

TEST_CASE("a word moving the node partially over itself is a violation") {
    // This map sends [0] to [01]: comparable, hence a violation even though
    // the image is a proper sub-cone.
    const Prm p = Prm({{w("0"), w("01")}, {w("10"), w("00")}, {w("11"), w("1")}});
    const GeneratorMap gm{{"g", p}};
    const std::vector<GroupWord> words{GroupWord{{"g", false}}};
    const auto report = check_demonstration_node(gm, w("0"), words);
    CHECK_FALSE(report.ok());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].witness == w("01"));
}

TEST_CASE("ping-pong on the embedding's cones") {
    const std::vector<Prm> h1{element_b(), element_b().inverse()};
    const std::vector<Prm> h2{element_a()};
    const auto report = ping_pong_check(h1, h2, w("10"), w("111"));
    CHECK(report.x2_not_inside_x1);
    CHECK(report.h1_moves_x2_into_x1);
    CHECK(report.h2_moves_x1_into_x2);
    CHECK(report.ok());
}

TEST_CASE("ping-pong rejects a nested second cone") {
    const std::vector<Prm> h1{element_b()};
    const std::vector<Prm> h2{element_a()};
    const auto report = ping_pong_check(h1, h2, w("1"), w("111"));
    CHECK_FALSE(report.x2_not_inside_x1);
    CHECK_FALSE(report.ok());
}

TEST_CASE("ping-pong rejects cones the maps do not separate") {
    // With the roles swapped the b-side images of [10] leave [111].
    const std::vector<Prm> h1{element_b(), element_b().inverse()};
    const std::vector<Prm> h2{element_a()};
    const auto report = ping_pong_check(h1, h2, w("111"), w("10"));
    CHECK_FALSE(report.h1_moves_x2_into_x1);
    CHECK_FALSE(report.ok());
}

TEST_CASE("ping-pong is monotone under shrinking the element sets") {
    const std::vector<Prm> h1_full{element_b(), element_b().inverse()};
    const std::vector<Prm> h1_sub{element_b()};
    const std::vector<Prm> h2{element_a()};
    CHECK(ping_pong_check(h1_full, h2, w("10"), w("111")).ok());
    CHECK(ping_pong_check(h1_sub, h2, w("10"), w("111")).ok());
}
