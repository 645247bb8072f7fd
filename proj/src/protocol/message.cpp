#include "dmincut/message.hpp"

#include <sstream>

namespace dmincut {

std::string_view to_string(MessageKind kind) {
  static constexpr std::array<std::string_view, kMessageKindCount> names = {
      "SET-RANK",   "FIND-MAX-RANK", "IS-ELIGIBLE-CONTRACT", "ELIGIBLE-CONTRACT",
      "SET-GROUP-ID", "SET-WEIGHT",  "GROUP-UPDATE",         "STOP",
      "LOCAL-MC",   "MINCUT",
  };
  return names[static_cast<std::size_t>(kind)];
}

namespace {

struct PayloadPrinter {
  std::ostream& os;

  void operator()(const SetRank& p) const { os << to_string(p.rank); }
  void operator()(const FindMaxRank& p) const { os << to_string(p.rank); }
  void operator()(const IsEligibleContract& p) const {
    os << p.initiator << ' ' << to_string(p.initiator_group) << ' ' << to_string(p.other_group);
  }
  void operator()(const EligibleContract& p) const {
    os << p.initiator << ' ' << to_string(p.initiator_group);
  }
  void operator()(const SetGroupId& p) const {
    os << to_string(p.first) << ' ' << to_string(p.second) << ' ' << to_string(p.new_group);
  }
  void operator()(const SetWeight&) const { os << '-'; }
  void operator()(const GroupUpdate& p) const { os << to_string(p.group); }
  void operator()(const Stop& p) const { os << (p.done ? "true" : "false"); }
  void operator()(const LocalMc& p) const {
    os << p.partial << ' ' << p.source << ' ' << p.destination;
  }
  void operator()(const Mincut& p) const { os << p.source << ' ' << p.value; }
};

}  // namespace

std::string payload_to_string(const Payload& payload) {
  std::ostringstream os;
  std::visit(PayloadPrinter{os}, payload);
  return os.str();
}

std::string trace_line(std::uint64_t pulse, const Message& msg) {
  std::ostringstream os;
  os << pulse << ' ' << to_string(msg.kind()) << ' ' << msg.from << ' ' << msg.to << ' '
     << payload_to_string(msg.payload);
  return os.str();
}

}  // namespace dmincut
