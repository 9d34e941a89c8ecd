#include "partialcramer/io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

namespace cramer::io {

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = (s.size() > 0 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

Scalar parse_rational_literal(const std::string& token) {
    const std::size_t slash = token.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(token)) {
            if (token.find('.') != std::string::npos ||
                token.find('e') != std::string::npos ||
                token.find('E') != std::string::npos) {
                throw Error("decimal literal '" + token +
                            "' not allowed with scalar rational; use p/q");
            }
            throw Error("invalid integer literal '" + token + "'");
        }
        return Scalar::rational(BigInt(token), BigInt(1));
    }
    const std::string num = token.substr(0, slash);
    const std::string den = token.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw Error("invalid rational literal '" + token + "'; expected p/q");
    }
    BigInt d(den);
    if (d == 0) {
        throw Error("rational literal '" + token + "' has zero denominator");
    }
    return Scalar::rational(BigInt(num), std::move(d));
}

Scalar parse_float_literal(const std::string& token) {
    if (token.find('/') != std::string::npos) {
        throw Error("rational literal '" + token + "' requires scalar rational");
    }
    const char* begin = token.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + token.size() || token.empty()) {
        throw Error("invalid number '" + token + "'");
    }
    return Scalar::float64(v);
}

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t col = 1;
    std::string current;
    std::size_t tok_line = 0;
    std::size_t tok_col = 0;

    auto flush = [&]() {
        if (!current.empty()) {
            tokens.push_back(Token{current, tok_line, tok_col});
            current.clear();
        }
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '#') {
            flush();
            while (i < text.size() && text[i] != '\n') {
                ++i;
            }
            ++line;
            col = 1;
            continue;
        }
        if (c == '\n') {
            flush();
            ++line;
            col = 1;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
            ++col;
            continue;
        }
        if (current.empty()) {
            tok_line = line;
            tok_col = col;
        }
        current.push_back(c);
        ++col;
    }
    flush();
    return tokens;
}

class TokenCursor {
  public:
    TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    bool done() const { return pos_ >= tokens_.size(); }

    const Token& peek() const {
        if (done()) {
            throw ParseError(last_line(), 1, "unexpected end of input");
        }
        return tokens_[pos_];
    }

    Token next() {
        Token t = peek();
        ++pos_;
        return t;
    }

    std::size_t last_line() const {
        return tokens_.empty() ? 1 : tokens_.back().line;
    }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

Scalar parse_literal_token(const Token& t, ScalarKind kind) {
    try {
        return parse_scalar_literal(t.text, kind);
    } catch (const Error& e) {
        throw ParseError(t.line, t.column, e.what());
    }
}

index_t parse_count_token(const Token& t) {
    for (char c : t.text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(t.line, t.column, "expected a positive integer, got '" + t.text + "'");
        }
    }
    unsigned long v = std::strtoul(t.text.c_str(), nullptr, 10);
    if (v < 1 || v > 100000) {
        throw ParseError(t.line, t.column, "dimension '" + t.text + "' out of range");
    }
    return static_cast<index_t>(v);
}

}  // namespace

Scalar parse_scalar_literal(const std::string& token, ScalarKind kind) {
    return kind == ScalarKind::rational ? parse_rational_literal(token)
                                        : parse_float_literal(token);
}

std::string format_scalar(const Scalar& s) {
    return s.to_string();
}

SystemSpec parse_system(const std::string& text) {
    TokenCursor cur(tokenize(text));

    ScalarKind kind = ScalarKind::rational;
    if (!cur.done() && cur.peek().text == "scalar") {
        cur.next();
        Token k = cur.next();
        if (k.text == "rational") {
            kind = ScalarKind::rational;
        } else if (k.text == "float") {
            kind = ScalarKind::float64;
        } else {
            throw ParseError(k.line, k.column,
                             "scalar kind must be 'rational' or 'float', got '" + k.text + "'");
        }
    }

    Token nkey = cur.next();
    if (nkey.text != "n") {
        throw ParseError(nkey.line, nkey.column, "expected 'n <dimension>', got '" + nkey.text + "'");
    }
    const index_t n = parse_count_token(cur.next());

    Token mkey = cur.next();
    if (mkey.text != "matrix") {
        throw ParseError(mkey.line, mkey.column, "expected 'matrix', got '" + mkey.text + "'");
    }
    std::vector<Scalar> entries;
    entries.reserve(n * n);
    for (index_t k = 0; k < n * n; ++k) {
        entries.push_back(parse_literal_token(cur.next(), kind));
    }

    Token rkey = cur.next();
    if (rkey.text != "rhs") {
        throw ParseError(rkey.line, rkey.column, "expected 'rhs', got '" + rkey.text + "'");
    }
    std::vector<Scalar> rhs;
    rhs.reserve(n);
    for (index_t k = 0; k < n; ++k) {
        rhs.push_back(parse_literal_token(cur.next(), kind));
    }

    if (!cur.done()) {
        const Token& extra = cur.peek();
        throw ParseError(extra.line, extra.column, "unexpected trailing token '" + extra.text + "'");
    }
    return SystemSpec(make_matrix(n, n, std::move(entries)), ColumnVector(std::move(rhs)));
}

SystemSpec load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, 0, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

namespace {

struct TextPosition {
    std::size_t line = 1;
    std::size_t column = 1;
};

TextPosition position_of_byte(const std::string& text, std::size_t byte) {
    TextPosition p;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

Scalar model_number(const nlohmann::json& v, ScalarKind kind, const char* field) {
    if (v.is_string()) {
        if (kind != ScalarKind::rational) {
            throw ParseError(0, 0, std::string("rational string in '") + field +
                                       "' requires scalar \"rational\"");
        }
        return parse_scalar_literal(v.get<std::string>(), ScalarKind::rational);
    }
    if (v.is_number_integer()) {
        long long i = v.get<long long>();
        return kind == ScalarKind::rational ? Scalar::rational(i)
                                            : Scalar::float64(static_cast<double>(i));
    }
    if (v.is_number_float()) {
        if (kind != ScalarKind::rational) {
            return Scalar::float64(v.get<double>());
        }
        throw ParseError(0, 0, std::string("decimal value in '") + field +
                                   "' not allowed with scalar \"rational\"; use a \"p/q\" string");
    }
    throw ParseError(0, 0, std::string("field '") + field + "' must be a number");
}

}  // namespace

ChainSpec parse_chain_model(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        TextPosition p = position_of_byte(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(p.line, p.column, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError(1, 1, "model file must be a JSON object");
    }
    if (!doc.contains("model") || !doc["model"].is_string()) {
        throw ParseError(1, 1, "model file needs a string field 'model'");
    }
    const std::string model = doc["model"].get<std::string>();
    if (model != "chain") {
        throw ParseError(1, 1, "unknown model '" + model + "' (supported: chain)");
    }

    ScalarKind kind = ScalarKind::rational;
    if (doc.contains("scalar")) {
        const std::string k = doc["scalar"].get<std::string>();
        if (k == "rational") {
            kind = ScalarKind::rational;
        } else if (k == "float") {
            kind = ScalarKind::float64;
        } else {
            throw ParseError(1, 1, "scalar must be \"rational\" or \"float\", got \"" + k + "\"");
        }
    }

    if (!doc.contains("masses") || !doc["masses"].is_array() || doc["masses"].empty()) {
        throw ParseError(1, 1, "model file needs a nonempty array field 'masses'");
    }
    std::vector<Scalar> masses;
    masses.reserve(doc["masses"].size());
    for (const auto& m : doc["masses"]) {
        masses.push_back(model_number(m, kind, "masses"));
    }
    if (!doc.contains("acceleration")) {
        throw ParseError(1, 1, "model file needs a field 'acceleration'");
    }
    Scalar acceleration = model_number(doc["acceleration"], kind, "acceleration");

    try {
        return ChainSpec(std::move(masses), std::move(acceleration));
    } catch (const Error& e) {
        throw ParseError(1, 1, e.what());
    }
}

ChainSpec load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, 0, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_chain_model(buf.str());
}

namespace {

bool scalar_is_negative(const Scalar& s) {
    if (s.kind() == ScalarKind::rational) {
        return s.as_rational() < 0;
    }
    return s.as_float() < 0.0;
}

void append_term(std::string& out, const Scalar& coeff, const std::string& symbol) {
    const bool neg = scalar_is_negative(coeff);
    const Scalar mag = coeff.abs();
    if (out.empty()) {
        if (neg) {
            out += "-";
        }
    } else {
        out += neg ? " - " : " + ";
    }
    out += format_scalar(mag) + "·" + symbol;
}

}  // namespace

std::vector<std::string> format_affine(const AffineSolution& sol) {
    std::vector<std::string> lines;
    lines.reserve(sol.j);
    for (index_t i = 1; i <= sol.j; ++i) {
        std::string expr;
        for (index_t l = 1; l <= sol.j; ++l) {
            const Scalar& c = sol.prime_coeffs.at(i, l);
            if (!c.is_zero()) {
                append_term(expr, c, "x'" + std::to_string(l));
            }
        }
        for (index_t t = 1; t <= sol.tail_coeffs.cols(); ++t) {
            const Scalar& c = sol.tail_coeffs.at(i, t);
            if (!c.is_zero()) {
                append_term(expr, c, "x" + std::to_string(sol.j + t));
            }
        }
        if (expr.empty()) {
            expr = "0";
        }
        lines.push_back("x" + std::to_string(i) + " = " + expr);
    }
    return lines;
}

nlohmann::json scalar_to_json(const Scalar& s) {
    if (s.kind() == ScalarKind::rational) {
        return s.to_string();
    }
    return s.as_float();
}

namespace {

Scalar scalar_from_json(const nlohmann::json& v, ScalarKind kind) {
    if (kind == ScalarKind::rational) {
        return parse_scalar_literal(v.get<std::string>(), ScalarKind::rational);
    }
    return Scalar::float64(v.get<double>());
}

nlohmann::json matrix_rows_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (index_t i = 1; i <= m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (index_t j = 1; j <= m.cols(); ++j) {
            row.push_back(scalar_to_json(m.at(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_rows_from_json(const nlohmann::json& rows, index_t expect_rows,
                             index_t expect_cols, ScalarKind kind) {
    if (!rows.is_array() || rows.size() != expect_rows) {
        throw Error("coefficient block has wrong row count");
    }
    Matrix m(expect_rows, expect_cols, kind);
    for (index_t i = 0; i < expect_rows; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != expect_cols) {
            throw Error("coefficient block has wrong column count");
        }
        for (index_t j = 0; j < expect_cols; ++j) {
            m.set(i + 1, j + 1, scalar_from_json(row[j], kind));
        }
    }
    return m;
}

}  // namespace

nlohmann::json affine_to_json(const AffineSolution& sol) {
    nlohmann::json out;
    out["j"] = sol.j;
    out["n"] = sol.n();
    out["scalar"] = to_string(sol.d_j.kind());
    out["d_j"] = scalar_to_json(sol.d_j);
    out["prime_coeffs"] = matrix_rows_to_json(sol.prime_coeffs);
    out["tail_coeffs"] = matrix_rows_to_json(sol.tail_coeffs);
    return out;
}

AffineSolution affine_from_json(const nlohmann::json& doc) {
    const index_t j = doc.at("j").get<index_t>();
    const index_t n = doc.at("n").get<index_t>();
    if (j < 1 || j > n) {
        throw Error("affine solution has inconsistent j/n");
    }
    const std::string kind_name = doc.at("scalar").get<std::string>();
    if (kind_name != "rational" && kind_name != "float") {
        throw Error("affine solution scalar must be 'rational' or 'float'");
    }
    const ScalarKind kind =
        kind_name == "rational" ? ScalarKind::rational : ScalarKind::float64;
    Scalar d_j = scalar_from_json(doc.at("d_j"), kind);
    Matrix prime = matrix_rows_from_json(doc.at("prime_coeffs"), j, j, kind);
    Matrix tail = matrix_rows_from_json(doc.at("tail_coeffs"), j, n - j, kind);
    return AffineSolution{j, std::move(d_j), std::move(prime), std::move(tail)};
}

nlohmann::json full_solution_to_json(const FullSolution& sol) {
    nlohmann::json out;
    out["n"] = sol.x.dim();
    out["scalar"] = to_string(sol.x.kind());
    out["det"] = scalar_to_json(sol.det_r);
    nlohmann::json xs = nlohmann::json::array();
    for (index_t i = 1; i <= sol.x.dim(); ++i) {
        xs.push_back(scalar_to_json(sol.x.at(i)));
    }
    out["x"] = std::move(xs);
    return out;
}

nlohmann::json trace_to_json(const EliminationTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : trace.steps) {
        nlohmann::json s = affine_to_json(step.solution);
        s["minor"] = scalar_to_json(step.minor);
        steps.push_back(std::move(s));
    }
    nlohmann::json out;
    out["steps"] = std::move(steps);
    return out;
}

}  // namespace cramer::io
