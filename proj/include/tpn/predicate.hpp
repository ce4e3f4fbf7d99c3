// ============================================================================
// tpn/predicate.hpp - marking predicates for reachability queries
// ============================================================================
//
//   expr := term (('&' | '|') term)*      '&' binds tighter than '|'
//   term := '(' expr ')' | place op nat
//   op   := '=' | '>=' | '<=' | '>' | '<'
//
// ============================================================================

#ifndef TPN_PREDICATE_HPP
#define TPN_PREDICATE_HPP

#include "tpn/net.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tpn {

class QueryParseError : public std::runtime_error {
public:
    QueryParseError(std::size_t column, const std::string& message)
        : std::runtime_error("column " + std::to_string(column) + ": " + message),
          column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

enum class Comparison { Eq, Ge, Le, Gt, Lt };

class MarkingPredicate {
public:
    struct Atom {
        PlaceId place;
        Comparison op;
        Tokens value;
    };
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        enum class Kind { Atom, And, Or } kind;
        Atom atom;
        std::vector<NodePtr> children;
    };

    explicit MarkingPredicate(NodePtr root) : root_(std::move(root)) {}

    bool holds(const Marking& m) const;
    std::string to_string(const TimePetriNet& net) const;

private:
    NodePtr root_;
};

MarkingPredicate parse_predicate(std::string_view text, const TimePetriNet& net);

}  // namespace tpn

#endif  // TPN_PREDICATE_HPP
