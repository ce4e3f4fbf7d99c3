// ============================================================================
// tpn/net_format.hpp - textual .tpn net format
// ============================================================================
//
//   net <ident>
//   place <ident> [init <nat>]
//   transition <ident> eft <rat> lft (<rat>|inf)
//   arc pre <place> <transition> [<nat>]
//   arc post <transition> <place> [<nat>]
//
// `<rat>` is `<nat>` or `<nat>/<nat>`. `#` starts a comment. Declarations
// after the header may come in any order.
//
// ============================================================================

#ifndef TPN_NET_FORMAT_HPP
#define TPN_NET_FORMAT_HPP

#include "tpn/net.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tpn {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

TimePetriNet parse_net(std::string_view text);
TimePetriNet parse_net(std::istream& in);
TimePetriNet load_net(const std::string& path);

std::string serialize_net(const TimePetriNet& net);

bool is_identifier(std::string_view s);

}  // namespace tpn

#endif  // TPN_NET_FORMAT_HPP
