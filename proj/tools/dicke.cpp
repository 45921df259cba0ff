// dicke.cpp — Command-line front end: dicke <subcommand> --config <path> [--out <path>] [--format csv|jsonl]
//
// Exit codes: 0 success, 1 usage or configuration error, 2 numerical failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dicke/commands.hpp"
#include "dicke/errors.hpp"

namespace {

int fail(const std::string& where, const std::string& what, int code) {
    std::cerr << "dicke " << where << ": error: " << what << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin-1 Dicke model: stability landscapes, moment and semiclassical dynamics, phase maps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(dicke::artifact_version));

    std::string config_path;
    std::string out_path;
    std::string format_name;
    for (const char* name : {"eigmap", "boundaries", "moments", "semiclassical", "phasemap"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "run configuration (key=value or JSON)")->required();
        sub->add_option("--out", out_path, "output file (default: stdout or the config's out key)");
        sub->add_option("--format", format_name, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const std::string sub_name = app.get_subcommands().front()->get_name();
    const dicke::Subcommand sub = *dicke::subcommand_from_string(sub_name);

    dicke::RunConfig config;
    try {
        std::ifstream in(config_path);
        if (!in) {
            return fail(sub_name, "cannot read config '" + config_path + "'", 1);
        }
        std::ostringstream text;
        text << in.rdbuf();
        config = dicke::parse_config(text.str(), sub);
    } catch (const dicke::Error& e) {
        return fail(sub_name, config_path + ": " + e.what(), 1);
    }
    if (!out_path.empty()) {
        config.out_path = out_path;
    }
    if (!format_name.empty()) {
        config.format = *dicke::output_format_from_string(format_name);
    }

    dicke::ResultTable table;
    try {
        table = dicke::run_subcommand(config);
    } catch (const dicke::InvalidParameter& e) {
        return fail(sub_name, e.what(), 1);
    } catch (const dicke::DegenerateInput& e) {
        return fail(sub_name, e.what(), 1);
    } catch (const dicke::Error& e) {
        return fail(sub_name, e.what(), 2);
    }

    try {
        if (config.out_path) {
            std::ofstream out(*config.out_path, std::ios::binary);
            if (!out) {
                return fail(sub_name, "cannot open '" + *config.out_path + "' for writing", 1);
            }
            dicke::emit(table, config.format, out);
        } else {
            dicke::emit(table, config.format, std::cout);
        }
    } catch (const std::exception& e) {
        return fail(sub_name, e.what(), 1);
    }
    return 0;
}
