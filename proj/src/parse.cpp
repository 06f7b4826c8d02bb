#include "dcg/parse.hpp"

#include <cctype>

namespace dcg {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& src) : src_(src) {}

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= src_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        return src_[pos_++];
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    std::size_t pos() const { return pos_; }

    Int integer() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("expected a number", pos_);
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            digits += src_[pos_++];
        return Int(digits);
    }

    Rat rational() {
        const Int num = integer();
        if (accept('/')) {
            const std::size_t at = pos_;
            const Int den = integer();
            if (den == 0) throw ParseError("zero denominator", at);
            return make_rat(num, den);
        }
        return Rat(num);
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
};

struct SpinorTerm {
    Rat coeff;
    bool is_blade = false; // else a vector letter
    Blade blade = 0;
    char letter = 'e';
    int index = 0;
};

// parse one term: [rational ['*']] atom | rational
SpinorTerm parse_term(Scanner& sc, bool vector_context) {
    SpinorTerm t;
    t.coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        t.coeff = sc.rational();
        if (!sc.accept('*')) {
            // bare rational: a scalar term (coefficient times the blade "1")
            const char c = sc.peek();
            if (c != 'e' && c != 'f') {
                t.is_blade = true;
                t.blade = 0;
                return t;
            }
        }
    }
    const std::size_t at = sc.pos();
    const char c = sc.get();
    if (c == '1') {
        t.is_blade = true;
        t.blade = 0;
        return t;
    }
    if (c != 'e' && c != 'f')
        throw ParseError("expected an atom ('1', e.., f..)", at);
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(sc.peek()))) digits += sc.get();
    if (digits.empty()) throw ParseError("atom needs indices", sc.pos());
    if (vector_context) {
        if (digits.size() != 1)
            throw ParseError("vector context requires degree-1 atoms", at);
        t.letter = c;
        t.index = digits[0] - '0';
        if (t.index < 1 || t.index > 7) throw ParseError("index outside 1..7", at);
        return t;
    }
    if (c == 'f') throw ParseError("f-atoms are not legal in a spinor", at);
    Blade s = 0;
    int prev = 0;
    for (char d : digits) {
        const int idx = d - '0';
        if (idx < 1 || idx > 7) throw ParseError("index outside 1..7", at);
        if (idx <= prev) throw ParseError("blade indices must strictly increase", at);
        s |= static_cast<Blade>(1u << (idx - 1));
        prev = idx;
    }
    t.is_blade = true;
    t.blade = s;
    return t;
}

} // namespace

ExteriorElement parse_spinor(const std::string& src) {
    Scanner sc(src);
    ExteriorElement out;
    bool negative = sc.accept('-');
    if (sc.done()) throw ParseError("empty expression", sc.pos());
    while (true) {
        SpinorTerm t = parse_term(sc, false);
        out.add_term(t.blade, negative ? Rat(-t.coeff) : t.coeff);
        if (sc.done()) break;
        const char op = sc.get();
        if (op == '+') negative = false;
        else if (op == '-') negative = true;
        else throw ParseError("expected '+' or '-'", sc.pos() - 1);
    }
    return out;
}

Vector14 parse_vector14(const std::string& src) {
    Scanner sc(src);
    Vector14 out;
    bool negative = sc.accept('-');
    if (sc.done()) throw ParseError("empty expression", sc.pos());
    while (true) {
        const std::size_t at = sc.pos();
        SpinorTerm t = parse_term(sc, true);
        if (t.is_blade) throw ParseError("vector context requires e/f atoms", at);
        const Rat c = negative ? Rat(-t.coeff) : t.coeff;
        if (t.letter == 'e') out.a[t.index - 1] += c;
        else out.b[t.index - 1] += c;
        if (sc.done()) break;
        const char op = sc.get();
        if (op == '+') negative = false;
        else if (op == '-') negative = true;
        else throw ParseError("expected '+' or '-'", sc.pos() - 1);
    }
    return out;
}

namespace {

// A Chow factor is either a pure integer or a class.
struct ChowValue {
    bool is_class = false;
    Int scalar = 1;
    ChowClass cls;

    ChowValue mul(const ChowValue& o) const {
        ChowValue r;
        if (is_class && o.is_class) {
            r.is_class = true;
            r.cls = multiply(cls, o.cls);
        } else if (is_class) {
            r.is_class = true;
            r.cls = cls * o.scalar;
        } else if (o.is_class) {
            r.is_class = true;
            r.cls = o.cls * scalar;
        } else {
            r.scalar = scalar * o.scalar;
        }
        return r;
    }
};

ChowValue parse_chow_factor(Scanner& sc) {
    ChowValue v;
    const std::size_t at = sc.pos();
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        v.scalar = sc.integer();
        return v;
    }
    const char c = sc.get();
    if (c != 't') throw ParseError("expected integer, tau[...] or t1..t6", at);
    if (sc.peek() == 'a') {
        sc.expect('a');
        sc.expect('u');
        sc.expect('[');
        std::vector<int> parts;
        if (!sc.accept(']')) {
            while (true) {
                const std::size_t pat = sc.pos();
                const Int p = sc.integer();
                if (p < 1 || p > 6)
                    throw ParseError("tau part exceeds 6", pat);
                parts.push_back(static_cast<int>(p.get_si()));
                if (sc.accept(']')) break;
                sc.expect(',');
            }
        }
        v.is_class = true;
        try {
            v.cls = ChowClass::basis(StrictPartition(parts));
        } catch (const DomainError& e) {
            throw ParseError(e.what(), at);
        }
        return v;
    }
    if (!std::isdigit(static_cast<unsigned char>(sc.peek())))
        throw ParseError("expected t1..t6 or tau[...]", at);
    const char d = sc.get();
    const int p = d - '0';
    if (p < 1 || p > 6) throw ParseError("special class index outside 1..6", at);
    v.is_class = true;
    v.cls = tau(p);
    return v;
}

ChowValue parse_chow_power(Scanner& sc) {
    ChowValue base = parse_chow_factor(sc);
    if (sc.accept('^')) {
        const std::size_t at = sc.pos();
        const Int e = sc.integer();
        if (e < 0 || e > 21) throw ParseError("exponent out of range", at);
        ChowValue acc;
        for (Int i = 0; i < e; ++i) acc = acc.mul(base);
        return acc;
    }
    return base;
}

ChowValue parse_chow_term(Scanner& sc) {
    ChowValue acc = parse_chow_power(sc);
    while (sc.accept('*')) acc = acc.mul(parse_chow_power(sc));
    return acc;
}

} // namespace

ChowClass parse_chow(const std::string& src) {
    Scanner sc(src);
    bool negative = sc.accept('-');
    if (sc.done()) throw ParseError("empty expression", sc.pos());
    ChowClass total;
    bool have_total = false;
    while (true) {
        ChowValue term = parse_chow_term(sc);
        ChowClass cls = term.is_class ? term.cls : tau_unit() * term.scalar;
        if (negative) cls = cls * Int(-1);
        if (!have_total) {
            total = cls;
            have_total = true;
        } else {
            total = total + cls; // GradeError on a non-homogeneous sum
        }
        if (sc.done()) break;
        const char op = sc.get();
        if (op == '+') negative = false;
        else if (op == '-') negative = true;
        else throw ParseError("expected '+' or '-'", sc.pos() - 1);
    }
    return total;
}

} // namespace dcg
