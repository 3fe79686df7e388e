#include "hhgap/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "hhgap/errors.hpp"

namespace hhgap {

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    void advance() {
        if (pos < s.size()) {
            if (s[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at line " + std::to_string(line) + ", column " +
                         std::to_string(col));
    }
};

class PolyParser {
  public:
    PolyParser(Scanner& sc, const std::vector<std::string>& vars,
               const CoeffRing& ring, const std::vector<int>& degrees)
        : sc_(sc), vars_(vars), ops_{ring, degrees} {}

    Polynomial parse_expr() {
        bool neg = false;
        sc_.skip_ws();
        if (sc_.peek() == '-') {
            neg = true;
            sc_.advance();
        } else if (sc_.peek() == '+') {
            sc_.advance();
        }
        Polynomial acc = parse_term();
        if (neg) acc = ops_.neg(acc);
        while (true) {
            sc_.skip_ws();
            char c = sc_.peek();
            if (c == '+' || c == '-') {
                sc_.advance();
                Polynomial t = parse_term();
                acc = (c == '+') ? ops_.add(acc, t) : ops_.sub(acc, t);
            } else {
                break;
            }
        }
        return acc;
    }

  private:
    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            sc_.skip_ws();
            if (sc_.peek() == '*') {
                sc_.advance();
                acc = ops_.mul(acc, parse_factor());
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_factor() {
        sc_.skip_ws();
        char c = sc_.peek();
        if (c == '(') {
            sc_.advance();
            Polynomial inner = parse_expr();
            sc_.skip_ws();
            if (sc_.peek() != ')') sc_.fail("expected ')'");
            sc_.advance();
            return maybe_power(inner);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int64_t num = parse_int();
            sc_.skip_ws();
            if (sc_.peek() == '/') {
                sc_.advance();
                sc_.skip_ws();
                int64_t den = parse_int();
                return Polynomial::constant(ops_.ring.canon(Rat(num, den)),
                                            vars_.size());
            }
            return maybe_power(
                Polynomial::constant(ops_.ring.canon(Rat(num)), vars_.size()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(sc_.peek())) ||
                   sc_.peek() == '_' || sc_.peek() == '\'') {
                name += sc_.peek();
                sc_.advance();
            }
            for (size_t v = 0; v < vars_.size(); ++v)
                if (vars_[v] == name)
                    return maybe_power(
                        Polynomial::variable(v, vars_.size()));
            sc_.fail("unknown variable '" + name + "'");
        }
        sc_.fail("expected a factor");
    }

    Polynomial maybe_power(Polynomial base) {
        sc_.skip_ws();
        if (sc_.peek() == '^') {
            sc_.advance();
            sc_.skip_ws();
            int64_t e = parse_int();
            if (e < 0) sc_.fail("negative exponent");
            return ops_.power(base, static_cast<int>(e));
        }
        return base;
    }

    int64_t parse_int() {
        sc_.skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(sc_.peek())))
            sc_.fail("expected an integer");
        int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(sc_.peek()))) {
            v = checked_mul(v, 10);
            v = checked_add(v, sc_.peek() - '0');
            sc_.advance();
        }
        return v;
    }

    Scanner& sc_;
    const std::vector<std::string>& vars_;
    PolyOps ops_;
};

std::string unquote(Scanner& sc) {
    sc.skip_ws();
    if (sc.peek() != '"') sc.fail("expected '\"'");
    sc.advance();
    std::string out;
    while (sc.peek() != '"') {
        if (sc.peek() == '\0' || sc.peek() == '\n') sc.fail("unterminated string");
        out += sc.peek();
        sc.advance();
    }
    sc.advance();
    return out;
}

std::vector<std::string> parse_string_list(Scanner& sc) {
    sc.skip_ws();
    if (sc.peek() != '[') sc.fail("expected '['");
    sc.advance();
    std::vector<std::string> out;
    sc.skip_ws();
    if (sc.peek() == ']') {
        sc.advance();
        return out;
    }
    while (true) {
        out.push_back(unquote(sc));
        sc.skip_ws();
        if (sc.peek() == ',') {
            sc.advance();
            continue;
        }
        if (sc.peek() == ']') {
            sc.advance();
            return out;
        }
        sc.fail("expected ',' or ']'");
    }
}

std::vector<int> parse_int_list(Scanner& sc) {
    sc.skip_ws();
    if (sc.peek() != '[') sc.fail("expected '['");
    sc.advance();
    std::vector<int> out;
    sc.skip_ws();
    if (sc.peek() == ']') {
        sc.advance();
        return out;
    }
    while (true) {
        sc.skip_ws();
        std::string num;
        while (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            num += sc.peek();
            sc.advance();
        }
        if (num.empty()) sc.fail("expected an integer");
        out.push_back(std::stoi(num));
        sc.skip_ws();
        if (sc.peek() == ',') {
            sc.advance();
            continue;
        }
        if (sc.peek() == ']') {
            sc.advance();
            return out;
        }
        sc.fail("expected ',' or ']'");
    }
}

CoeffRing parse_ring(const std::string& spec, Scanner& sc) {
    if (spec == "Q") return CoeffRing::rationals();
    if (spec == "Z") return CoeffRing::integers();
    if (spec.rfind("Fp:", 0) == 0) {
        int64_t p = std::stoll(spec.substr(3));
        if (p < 2) sc.fail("modulus must be a prime >= 2");
        for (int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) sc.fail("modulus " + std::to_string(p) + " is not prime");
        return CoeffRing::prime_field(p);
    }
    sc.fail("unknown ring '" + spec + "'");
}

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars,
                            const CoeffRing& ring,
                            const std::vector<int>& degrees) {
    Scanner sc{text};
    PolyParser pp(sc, vars, ring, degrees);
    Polynomial p = pp.parse_expr();
    sc.skip_ws();
    if (sc.peek() != '\0') sc.fail("trailing input in polynomial");
    return p;
}

PresentationFile parse_presentation_string(const std::string& text) {
    Scanner sc{text};
    bool have_ring = false;
    CoeffRing ring;
    std::vector<std::string> vars;
    std::vector<int> degrees;
    std::vector<std::string> relation_texts;
    std::vector<std::string> target_texts;
    bool have_vars = false;

    while (sc.peek() != '\0') {
        sc.skip_ws();
        if (sc.peek() == '\n') {
            sc.advance();
            continue;
        }
        if (sc.peek() == '#') {
            while (sc.peek() != '\n' && sc.peek() != '\0') sc.advance();
            continue;
        }
        std::string key;
        while (std::isalnum(static_cast<unsigned char>(sc.peek())) ||
               sc.peek() == '_') {
            key += sc.peek();
            sc.advance();
        }
        if (key.empty()) sc.fail("expected a key");
        sc.skip_ws();
        if (sc.peek() != '=') sc.fail("expected '=' after '" + key + "'");
        sc.advance();
        if (key == "ring") {
            ring = parse_ring(unquote(sc), sc);
            have_ring = true;
        } else if (key == "vars") {
            vars = parse_string_list(sc);
            have_vars = true;
        } else if (key == "degrees") {
            degrees = parse_int_list(sc);
        } else if (key == "relations") {
            relation_texts = parse_string_list(sc);
        } else if (key == "target_relations") {
            target_texts = parse_string_list(sc);
        } else {
            sc.fail("unknown key '" + key + "'");
        }
        sc.skip_ws();
        if (sc.peek() != '\n' && sc.peek() != '\0' && sc.peek() != '#')
            sc.fail("trailing input after value");
    }
    if (!have_ring) throw ParseError("missing 'ring' entry");
    if (!have_vars) throw ParseError("missing 'vars' entry");
    if (degrees.empty()) degrees.assign(vars.size(), 1);

    std::vector<Polynomial> rels;
    for (const auto& t : relation_texts)
        rels.push_back(parse_polynomial(t, vars, ring, degrees));
    PresentationFile pf;
    pf.algebra = AlgebraPresentation(ring, vars, degrees, std::move(rels));
    for (const auto& t : target_texts)
        pf.target_relations.push_back(
            normal_form(parse_polynomial(t, vars, ring, degrees), pf.algebra));
    return pf;
}

PresentationFile parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation_string(ss.str());
}

ModuleFileData parse_module_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    Scanner sc{text};
    ModuleFileData out;
    while (sc.peek() != '\0') {
        sc.skip_ws();
        if (sc.peek() == '\n') {
            sc.advance();
            continue;
        }
        if (sc.peek() == '#') {
            while (sc.peek() != '\n' && sc.peek() != '\0') sc.advance();
            continue;
        }
        std::string key;
        while (std::isalnum(static_cast<unsigned char>(sc.peek())) ||
               sc.peek() == '_') {
            key += sc.peek();
            sc.advance();
        }
        if (key.empty()) sc.fail("expected a key");
        sc.skip_ws();
        if (sc.peek() != '=') sc.fail("expected '='");
        sc.advance();
        if (key == "generators") {
            out.generator_degrees = parse_int_list(sc);
        } else if (key == "relation") {
            out.relation_columns.push_back(parse_string_list(sc));
        } else {
            sc.fail("unknown key '" + key + "'");
        }
        sc.skip_ws();
        if (sc.peek() != '\n' && sc.peek() != '\0' && sc.peek() != '#')
            sc.fail("trailing input after value");
    }
    if (out.generator_degrees.empty())
        throw ParseError("module file lacks a 'generators' entry");
    return out;
}

std::string print_presentation(const PresentationFile& pf) {
    const AlgebraPresentation& a = pf.algebra;
    std::string out;
    out += "ring = \"" + a.ring().to_string() + "\"\n";
    out += "vars = [";
    for (size_t i = 0; i < a.vars().size(); ++i) {
        if (i) out += ", ";
        out += "\"" + a.vars()[i] + "\"";
    }
    out += "]\n";
    out += "degrees = [";
    for (size_t i = 0; i < a.degrees().size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(a.degrees()[i]);
    }
    out += "]\n";
    out += "relations = [";
    for (size_t i = 0; i < a.relations().size(); ++i) {
        if (i) out += ", ";
        out += "\"" + a.poly_str(a.relations()[i]) + "\"";
    }
    out += "]\n";
    if (!pf.target_relations.empty()) {
        out += "target_relations = [";
        for (size_t i = 0; i < pf.target_relations.size(); ++i) {
            if (i) out += ", ";
            out += "\"" + a.poly_str(pf.target_relations[i]) + "\"";
        }
        out += "]\n";
    }
    return out;
}

}  // namespace hhgap
