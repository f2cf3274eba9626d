#include "block/text.hpp"

#include <json.hpp>

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace block {

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, const std::string &what)
    : std::runtime_error(what + " at byte " + std::to_string(offset)), kind_(kind), offset_(offset) {}

namespace {

constexpr std::int64_t kIndexLimit = std::int64_t{1} << 30;

class Parser {
  public:
    Parser(std::string_view text, const AlgebraVariant &variant) : s_(text), variant_(variant) {}

    Element parse() {
        skip_ws();
        if (at_end())
            fail("empty input");
        // Bare "0".
        {
            const std::size_t save = pos_;
            if (peek() == '0') {
                ++pos_;
                skip_ws();
                if (at_end())
                    return {};
            }
            pos_ = save;
        }
        Element out;
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
        }
        for (;;) {
            term(sign, out);
            skip_ws();
            if (at_end())
                return out;
            if (peek() != '+' && peek() != '-')
                fail("expected '+', '-' or end of input");
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
        }
    }

  private:
    [[noreturn]] void fail(const std::string &what, ParseErrorKind kind = ParseErrorKind::Syntax) const {
        throw ParseError(kind, pos_, what);
    }
    [[nodiscard]] bool at_end() const { return pos_ >= s_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
        skip_ws();
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::int64_t index_value(std::size_t &start) {
        skip_ws();
        start = pos_;
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
        }
        const mpz_class v(digits());
        if (v >= kIndexLimit) {
            pos_ = start;
            fail("index out of range");
        }
        const auto out = static_cast<std::int64_t>(v.get_si());
        return neg ? -out : out;
    }

    void term(int sign, Element &out) {
        Scalar coeff(sign);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num(digits());
            mpz_class den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                den = mpz_class(digits());
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator", ParseErrorKind::ZeroDenominator);
                }
            }
            coeff *= Scalar(num, den);
            expect('*');
        }
        if (peek() == 'c') {
            if (variant_.kind != AlgebraKind::BHat)
                fail("central element 'c' is only available in BHat", ParseErrorKind::CentralNotAllowed);
            ++pos_;
            out.add_central(coeff);
            return;
        }
        if (peek() != 'L')
            fail("expected 'L[' or 'c'");
        ++pos_;
        expect('[');
        std::size_t at = 0;
        const auto alpha = index_value(at);
        expect(',');
        const auto i = index_value(at);
        if (i < 0) {
            pos_ = at;
            fail("negative second index", ParseErrorKind::NegativeSecondIndex);
        }
        skip_ws();
        if (peek() != ']')
            fail("expected ']'");
        ++pos_;
        out.add_term({alpha, i}, coeff);
    }

    std::string_view s_;
    AlgebraVariant variant_;
    std::size_t pos_ = 0;
};

void render_term(std::ostringstream &os, bool first, const Scalar &c, const std::string &basis) {
    const bool neg = c.sign() < 0;
    if (first)
        os << (neg ? "-" : "");
    else
        os << (neg ? " - " : " + ");
    const Scalar mag = neg ? -c : c;
    if (mag != Scalar(1))
        os << mag << '*';
    os << basis;
}

std::string basis_text(const BasisIndex &b) {
    return "L[" + std::to_string(b.alpha) + "," + std::to_string(b.i) + "]";
}

} // namespace

Element parse_element(std::string_view text, const AlgebraVariant &variant) {
    return Parser(text, variant).parse();
}

std::string render_element(const Element &x) {
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[idx, c] : x.terms()) {
        render_term(os, first, c, basis_text(idx));
        first = false;
    }
    if (!x.central().is_zero())
        render_term(os, first, x.central(), "c");
    return os.str();
}

std::vector<BracketRecord> structure_constants(const AlgebraVariant &variant, const Window &window) {
    std::vector<BracketRecord> out;
    const auto basis = window.basis();
    for (const auto &l : basis)
        for (const auto &r : basis) {
            const Element br = bracket(variant, Element::basis(l.alpha, l.i), Element::basis(r.alpha, r.i));
            if (br.is_zero())
                continue;
            BracketRecord rec{l, r, {}, br.central()};
            for (const auto &[idx, c] : br.terms())
                rec.terms.emplace_back(idx, c);
            out.push_back(std::move(rec));
        }
    return out;
}

void export_structure_constants(const AlgebraVariant &variant, const Window &window, ExportFormat format,
                                std::ostream &out) {
    const auto records = structure_constants(variant, window);
    const bool with_central = variant.kind == AlgebraKind::BHat;
    if (format == ExportFormat::Json) {
        using nlohmann::ordered_json;
        ordered_json doc;
        doc["variant"] = variant.name();
        doc["window"] = {{"alpha_min", window.alpha_min}, {"alpha_max", window.alpha_max}, {"i_max", window.i_max}};
        ordered_json brackets = ordered_json::array();
        for (const auto &rec : records) {
            ordered_json r;
            r["left"] = {rec.left.alpha, rec.left.i};
            r["right"] = {rec.right.alpha, rec.right.i};
            ordered_json terms = ordered_json::array();
            for (const auto &[idx, c] : rec.terms)
                terms.push_back({{"index", {idx.alpha, idx.i}}, {"coeff", c.str()}});
            r["terms"] = std::move(terms);
            if (with_central)
                r["central"] = rec.central.str();
            brackets.push_back(std::move(r));
        }
        doc["brackets"] = std::move(brackets);
        out << doc.dump(2) << '\n';
    } else {
        out << "# variant=" << variant.name() << " window=" << window.str() << '\n';
        out << "left_alpha,left_i,right_alpha,right_i,res_alpha,res_i,coeff,central\n";
        for (const auto &rec : records) {
            const std::string central = with_central ? rec.central.str() : "";
            auto prefix = [&] {
                out << rec.left.alpha << ',' << rec.left.i << ',' << rec.right.alpha << ',' << rec.right.i << ',';
            };
            if (rec.terms.empty()) {
                prefix();
                out << ",,," << central << '\n';
            }
            for (const auto &[idx, c] : rec.terms) {
                prefix();
                out << idx.alpha << ',' << idx.i << ',' << c.str() << ',' << central << '\n';
            }
        }
    }
    if (!out)
        throw std::ios_base::failure("failed to write structure constants");
}

std::vector<BracketRecord> read_structure_json(std::istream &in) {
    const auto doc = nlohmann::json::parse(in);
    std::vector<BracketRecord> out;
    for (const auto &r : doc.at("brackets")) {
        BracketRecord rec;
        rec.left = {r.at("left").at(0).get<std::int64_t>(), r.at("left").at(1).get<std::int64_t>()};
        rec.right = {r.at("right").at(0).get<std::int64_t>(), r.at("right").at(1).get<std::int64_t>()};
        for (const auto &t : r.at("terms"))
            rec.terms.emplace_back(BasisIndex{t.at("index").at(0).get<std::int64_t>(),
                                              t.at("index").at(1).get<std::int64_t>()},
                                   Scalar::parse(t.at("coeff").get<std::string>()));
        if (r.contains("central"))
            rec.central = Scalar::parse(r.at("central").get<std::string>());
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<BracketRecord> read_structure_csv(std::istream &in) {
    std::vector<BracketRecord> out;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#')
            continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            f.push_back(cell);
        if (!line.empty() && line.back() == ',')
            f.emplace_back();
        if (f.size() != 8)
            throw std::runtime_error("malformed structure-constant CSV row: " + line);
        const BasisIndex l{std::stoll(f[0]), std::stoll(f[1])};
        const BasisIndex r{std::stoll(f[2]), std::stoll(f[3])};
        if (out.empty() || out.back().left != l || out.back().right != r)
            out.push_back({l, r, {}, f[7].empty() ? Scalar(0) : Scalar::parse(f[7])});
        if (!f[4].empty())
            out.back().terms.emplace_back(BasisIndex{std::stoll(f[4]), std::stoll(f[5])}, Scalar::parse(f[6]));
    }
    return out;
}

} // namespace block
