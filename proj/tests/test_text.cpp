#include "block/sampling.hpp"
#include "block/text.hpp"

#include <doctest.h>

#include <sstream>

using namespace block;

namespace {

Element L(std::int64_t a, std::int64_t i, const Scalar &c = Scalar(1)) { return Element::basis(a, i, c); }

ParseError parse_failure(const std::string &text, const AlgebraVariant &v = AlgebraVariant::b()) {
    try {
        parse_element(text, v);
    } catch (const ParseError &e) {
        return e;
    }
    FAIL("expected a parse error for '" << text << "'");
    return ParseError(ParseErrorKind::Syntax, 0, "");
}

} // namespace

TEST_CASE("parsing elements") {
    CHECK(parse_element("L[2,1]") == L(2, 1));
    CHECK(parse_element("-3/2*L[0,3] + L[0,3]") == L(0, 3, Scalar(-1, 2)));
    CHECK(parse_element("0").is_zero());
    CHECK(parse_element("  0  ").is_zero());
    CHECK(parse_element("0*L[1,1]").is_zero());
    CHECK(parse_element(" L [ -2 , 0 ]-2*L[5,1]+ 4/6 * L[5,1]") == L(-2, 0) + L(5, 1, Scalar(-4, 3)));
    CHECK(parse_element("+L[1,0]") == L(1, 0));
    CHECK(parse_element("L[2,0] + c", AlgebraVariant::bhat()) == L(2, 0) + Element::central_unit());
    CHECK(parse_element("-1/6*c", AlgebraVariant::bhat()) == Element::central_unit(Scalar(-1, 6)));
}

TEST_CASE("parse errors carry a kind and byte offset") {
    const auto neg = parse_failure("L[1,-1]");
    CHECK(neg.kind() == ParseErrorKind::NegativeSecondIndex);
    CHECK(neg.offset() == 4);

    const auto central = parse_failure("L[1,0] + c");
    CHECK(central.kind() == ParseErrorKind::CentralNotAllowed);
    CHECK(central.offset() == 9);

    const auto zero = parse_failure("3/0*L[1,0]");
    CHECK(zero.kind() == ParseErrorKind::ZeroDenominator);
    CHECK(zero.offset() == 2);

    CHECK(parse_failure("").kind() == ParseErrorKind::Syntax);
    CHECK(parse_failure("L[1,0] +").kind() == ParseErrorKind::Syntax);
    CHECK(parse_failure("L[1,0] L[2,0]").offset() == 7);
    CHECK(parse_failure("2 L[1,0]").kind() == ParseErrorKind::Syntax);
    CHECK(parse_failure("L(1,0)").offset() == 1);
    CHECK(parse_failure("0 + L[1,0]").kind() == ParseErrorKind::Syntax);
    CHECK(parse_failure("L[99999999999,0]").kind() == ParseErrorKind::Syntax);
    CHECK(parse_failure("L[1,0]]").offset() == 6);
}

TEST_CASE("rendering") {
    CHECK(render_element(Element{}) == "0");
    CHECK(render_element(L(5, 3, -1)) == "-L[5,3]");
    CHECK(render_element(L(3, 2, -5)) == "-5*L[3,2]");
    CHECK(render_element(L(0, 0, 4) + Element::central_unit()) == "4*L[0,0] + c");
    CHECK(render_element(L(1, 0, Scalar(1, 2)) + L(-1, 2, -3) + Element::central_unit(Scalar(-2, 3))) ==
          "-3*L[-1,2] + 1/2*L[1,0] - 2/3*c");
}

TEST_CASE("round trip") {
    Sampler rng(2024);
    for (int k = 0; k < 500; ++k) {
        const Element x = rng.element(true);
        const std::string text = render_element(x);
        CHECK(parse_element(text, AlgebraVariant::bhat()) == x);
    }
    for (const char *messy : {"  L[1,0]+2*L[1,0] - 3/6 * L[ -2 , 0 ]", "-0/5*L[1,1] + 7/7*L[0,0]", "0"}) {
        const std::string once = render_element(parse_element(messy));
        CHECK(render_element(parse_element(once)) == once);
    }
}

TEST_CASE("structure constant tables") {
    const auto b01 = structure_constants(AlgebraVariant::b(), Window::make(0, 1, 0));
    // (0-1)(0+1) - (1-1)(0+1) = -1
    REQUIRE(b01.size() == 2);
    CHECK(b01[0].left == BasisIndex{0, 0});
    CHECK(b01[0].right == BasisIndex{1, 0});
    CHECK(b01[0].terms == std::vector<std::pair<BasisIndex, Scalar>>{{{1, 0}, Scalar(-1)}});
    CHECK(b01[1].terms == std::vector<std::pair<BasisIndex, Scalar>>{{{1, 0}, Scalar(1)}});

    const auto hat = structure_constants(AlgebraVariant::bhat(), Window::make(-2, 2, 0));
    bool found = false;
    for (const auto &r : hat)
        if (r.left == BasisIndex{2, 0} && r.right == BasisIndex{-2, 0}) {
            found = true;
            CHECK(r.central == Scalar(1));
        }
    CHECK(found);

    // Swapped pairs carry negated coefficients.
    const auto table = structure_constants(AlgebraVariant::bsg(1), Window::make(-2, 2, 2));
    for (const auto &r : table) {
        auto it = std::find_if(table.begin(), table.end(),
                               [&r](const BracketRecord &o) { return o.left == r.right && o.right == r.left; });
        REQUIRE(it != table.end());
        REQUIRE(it->terms.size() == r.terms.size());
        for (std::size_t k = 0; k < r.terms.size(); ++k)
            CHECK(it->terms[k].second == -r.terms[k].second);
    }
}

TEST_CASE("JSON and CSV exports") {
    const Window w = Window::make(-2, 2, 1);
    std::stringstream json, csv;
    export_structure_constants(AlgebraVariant::bhat(), w, ExportFormat::Json, json);
    export_structure_constants(AlgebraVariant::bhat(), w, ExportFormat::Csv, csv);

    const std::string csv_text = csv.str();
    CHECK(csv_text.rfind("# variant=BHat window=-2:2:1\n"
                         "left_alpha,left_i,right_alpha,right_i,res_alpha,res_i,coeff,central\n",
                         0) == 0);
    const std::string json_text = json.str();
    CHECK(json_text.find("\"variant\": \"BHat\"") != std::string::npos);
    CHECK(json_text.find("\"brackets\"") != std::string::npos);
    CHECK(json_text.find("\"alpha_min\": -2") != std::string::npos);

    const auto a = read_structure_json(json);
    const auto b = read_structure_csv(csv);
    CHECK(a == b);
    CHECK(a == structure_constants(AlgebraVariant::bhat(), w));

    std::stringstream plain;
    export_structure_constants(AlgebraVariant::b(), w, ExportFormat::Json, plain);
    CHECK(plain.str().find("central") == std::string::npos);
}
