// tpn-gen: writes generated nets in the .tpn format.
//
//   tpn-gen random <seed>      small random net
//   tpn-gen gate <trains>      level crossing
//   tpn-gen prodcons <slots>   producer/consumer

#include "tpn/generators.hpp"
#include "tpn/net_format.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace tpn;

int main(int argc, char** argv) {
    CLI::App app{"Generate Time Petri Nets"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("-o", output, "Output file (default stdout)");

    std::uint64_t seed = 0;
    RandomNetParams params;
    auto* random_cmd = app.add_subcommand("random", "Small random net");
    random_cmd->add_option("seed", seed)->required();
    random_cmd->add_option("--places", params.max_places)->capture_default_str();
    random_cmd->add_option("--transitions", params.max_transitions)->capture_default_str();
    random_cmd->add_option("--max-bound", params.max_bound)->capture_default_str();

    std::size_t size = 0;
    auto* gate_cmd = app.add_subcommand("gate", "Level crossing");
    gate_cmd->add_option("trains", size)->required()->check(CLI::Range(2, 64));
    auto* pc_cmd = app.add_subcommand("prodcons", "Producer/consumer");
    pc_cmd->add_option("slots", size)->required()->check(CLI::Range(1, 1000));

    for (auto* sub : {random_cmd, gate_cmd, pc_cmd})
        sub->fallthrough();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    TimePetriNet net;
    if (*random_cmd)
        net = random_net(seed, params);
    else if (*gate_cmd)
        net = level_crossing(size);
    else
        net = producer_consumer(size);

    const std::string text = serialize_net(net);
    if (output.empty() || output == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << output << "'\n";
        return 2;
    }
    out << text;
    return 0;
}
