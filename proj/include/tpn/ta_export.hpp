// ============================================================================
// tpn/ta_export.hpp - textual forms of a timed automaton
// ============================================================================
//
// XTA (one process, no channels):
//
//   // generated by tpn-reach
//   clock x_T1, x_T2;
//   process P() {
//     state M0 { x_T2 <= 1 }, M1;
//     init M0;
//     trans
//       M0 -> M1 { guard x_T2 >= 1; assign x_T1 := 0; };
//   }
//   system P;
//
// KRONOS (.tg):
//
//   #states 2
//   #trans 1
//   #clocks 2
//   x_T1 x_T2
//
//   state: 0
//   prop: M0
//   invar: x_T2 <= 1
//   trans:
//   x_T2 >= 1 => T2; reset{ x_T1 }; goto 1
//
// Guards x >= 0 are left out of every format.
//
// ============================================================================

#ifndef TPN_TA_EXPORT_HPP
#define TPN_TA_EXPORT_HPP

#include "tpn/timed_automaton.hpp"

#include <stdexcept>
#include <string>

namespace tpn {

class UnsupportedFeature : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class TaFormat { Xta, Kronos, Dot };

std::string export_xta(const TimedAutomaton& ta);
/// Throws UnsupportedFeature on clock copies.
std::string export_kronos(const TimedAutomaton& ta);
std::string export_dot(const TimedAutomaton& ta);

std::string export_ta(const TimedAutomaton& ta, TaFormat format);

std::string render_atom(const TimedAutomaton& ta, const ClockAtom& atom);

}  // namespace tpn

#endif  // TPN_TA_EXPORT_HPP
