#ifndef TPN_TESTS_SUPPORT_HPP
#define TPN_TESTS_SUPPORT_HPP

#include "tpn/net.hpp"
#include "tpn/net_format.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace support {

inline std::string source_path(const std::string& rel) {
    return std::string(TPN_SOURCE_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline tpn::ScaledNet bundled(const std::string& name) {
    return tpn::scale_net(tpn::load_net(source_path("nets/" + name + ".tpn")));
}

inline tpn::Marking marking(std::initializer_list<tpn::Tokens> tokens) {
    return tpn::Marking(std::vector<tpn::Tokens>(tokens));
}

/// Transition id by name; the tests only ask for names that exist.
inline tpn::TransitionId tid(const tpn::ScaledNet& net, const std::string& name) {
    return *net.net().find_transition(name);
}

}  // namespace support

#endif
