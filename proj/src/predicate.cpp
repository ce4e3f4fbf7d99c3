#include "tpn/predicate.hpp"

#include <cctype>
#include <charconv>
#include <functional>

namespace tpn {

namespace {

class PredicateParser {
public:
    PredicateParser(std::string_view text, const TimePetriNet& net) : text_(text), net_(net) {}

    MarkingPredicate::NodePtr parse() {
        auto root = disjunction();
        skip_space();
        if (pos_ < text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return root;
    }

private:
    using Node = MarkingPredicate::Node;
    using NodePtr = MarkingPredicate::NodePtr;

    [[noreturn]] void fail(const std::string& msg) const { throw QueryParseError(pos_ + 1, msg); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr combine(Node::Kind kind, std::vector<NodePtr> parts) {
        if (parts.size() == 1)
            return parts.front();
        auto node = std::make_shared<Node>();
        node->kind = kind;
        node->children = std::move(parts);
        return node;
    }

    NodePtr disjunction() {
        std::vector<NodePtr> parts{conjunction()};
        while (accept('|'))
            parts.push_back(conjunction());
        return combine(Node::Kind::Or, std::move(parts));
    }

    NodePtr conjunction() {
        std::vector<NodePtr> parts{term()};
        while (accept('&'))
            parts.push_back(term());
        return combine(Node::Kind::And, std::move(parts));
    }

    NodePtr term() {
        if (accept('(')) {
            auto inner = disjunction();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start)
            fail("expected a place name or '('");
        const std::string name(text_.substr(start, pos_ - start));
        auto place = net_.find_place(name);
        if (!place) {
            pos_ = start;
            fail("unknown place '" + name + "'");
        }

        skip_space();
        Comparison op;
        auto peek = [&](std::size_t off) { return pos_ + off < text_.size() ? text_[pos_ + off] : '\0'; };
        if (peek(0) == '>' && peek(1) == '=') {
            op = Comparison::Ge;
            pos_ += 2;
        } else if (peek(0) == '<' && peek(1) == '=') {
            op = Comparison::Le;
            pos_ += 2;
        } else if (peek(0) == '>') {
            op = Comparison::Gt;
            ++pos_;
        } else if (peek(0) == '<') {
            op = Comparison::Lt;
            ++pos_;
        } else if (peek(0) == '=') {
            op = Comparison::Eq;
            ++pos_;
            if (peek(0) == '=')  // tolerate "=="
                ++pos_;
        } else {
            fail("expected a comparison operator");
        }

        skip_space();
        const std::size_t num_start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == num_start)
            fail("expected a token count");
        Tokens value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + num_start, text_.data() + pos_, value);
        if (ec != std::errc()) {
            pos_ = num_start;
            fail("token count out of range");
        }

        auto node = std::make_shared<Node>();
        node->kind = Node::Kind::Atom;
        node->atom = {*place, op, value};
        return node;
    }

    std::string_view text_;
    const TimePetriNet& net_;
    std::size_t pos_ = 0;
};

bool eval(const MarkingPredicate::Node& node, const Marking& m) {
    using Kind = MarkingPredicate::Node::Kind;
    switch (node.kind) {
    case Kind::Atom: {
        const Tokens v = m[node.atom.place];
        switch (node.atom.op) {
        case Comparison::Eq: return v == node.atom.value;
        case Comparison::Ge: return v >= node.atom.value;
        case Comparison::Le: return v <= node.atom.value;
        case Comparison::Gt: return v > node.atom.value;
        case Comparison::Lt: return v < node.atom.value;
        }
        return false;
    }
    case Kind::And:
        for (const auto& c : node.children)
            if (!eval(*c, m))
                return false;
        return true;
    case Kind::Or:
        for (const auto& c : node.children)
            if (eval(*c, m))
                return true;
        return false;
    }
    return false;
}

const char* op_text(Comparison op) {
    switch (op) {
    case Comparison::Eq: return "=";
    case Comparison::Ge: return ">=";
    case Comparison::Le: return "<=";
    case Comparison::Gt: return ">";
    case Comparison::Lt: return "<";
    }
    return "?";
}

std::string render(const MarkingPredicate::Node& node, const TimePetriNet& net, bool nested) {
    using Kind = MarkingPredicate::Node::Kind;
    if (node.kind == Kind::Atom)
        return net.places()[node.atom.place] + op_text(node.atom.op) +
               std::to_string(node.atom.value);
    std::string out;
    const char* sep = node.kind == Kind::And ? "&" : "|";
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i > 0)
            out += sep;
        out += render(*node.children[i], net, true);
    }
    return nested ? "(" + out + ")" : out;
}

}  // namespace

bool MarkingPredicate::holds(const Marking& m) const { return eval(*root_, m); }

std::string MarkingPredicate::to_string(const TimePetriNet& net) const {
    return render(*root_, net, false);
}

MarkingPredicate parse_predicate(std::string_view text, const TimePetriNet& net) {
    return MarkingPredicate(PredicateParser(text, net).parse());
}

}  // namespace tpn
