#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "schurdex/cli.hpp"

namespace cli = schurdex::cli;

int main(int argc, char** argv) {
    CLI::App app{"Local and global Schur indices of cyclotomic and quaternion algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string route, corpus;
    bool check = false, table = false;
    app.add_option("--route", route, "force a route")
        ->check(CLI::IsMember({"shortcut", "decompose", "character", "quaternion"}));
    app.add_flag("--check", check, "run every applicable route and compare");
    app.add_flag("--table", table, "aligned text instead of JSON");
    app.add_option("--corpus", corpus, "one operand per line, # starts a comment")->check(CLI::ExistingFile);

    std::string descriptor;
    std::vector<std::string> quat_entries;
    std::int64_t n = 0, p = 0;
    std::string field = "Q";
    for (const char* name : {"index", "decompose", "group"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("descriptor", descriptor, "algebra descriptor, e.g. [1,Q,4,[2,3,2]]");
    }
    app.get_subcommand("index")->description("local indices and Schur index");
    app.get_subcommand("decompose")->description("tensor factors of a two-generator algebra");
    app.get_subcommand("group")->description("defining group, Frobenius-Schur indicator, dyadic verdict");
    auto* quat = app.add_subcommand("quat", "local indices of (a,b) over Q");
    quat->add_option("entries", quat_entries, "a b")->expected(0, 2);
    auto* efg = app.add_subcommand("efg", "ramification of p in F(zeta_n)/F");
    efg->add_option("--n", n);
    efg->add_option("--field", field);
    efg->add_option("--p", p);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kParse;
    }

    const auto command = cli::parse_command(app.get_subcommands().front()->get_name());
    cli::Options opts;
    opts.check = check;
    if (!route.empty()) opts.route = schurdex::parse_route(route);

    std::vector<std::string> operands;
    if (!corpus.empty()) {
        std::ifstream in(corpus);
        operands = cli::read_corpus(in);
    } else if (command == cli::Command::Quat) {
        if (quat_entries.size() != 2) {
            std::cerr << "quat needs two integers\n";
            return cli::kParse;
        }
        operands.push_back(quat_entries[0] + " " + quat_entries[1]);
    } else if (command == cli::Command::Efg) {
        if (n <= 0 || p <= 0) {
            std::cerr << "efg needs --n and --p\n";
            return cli::kParse;
        }
        operands.push_back(std::to_string(n) + " " + field + " " + std::to_string(p));
    } else {
        if (descriptor.empty()) {
            std::cerr << "missing descriptor\n";
            return cli::kParse;
        }
        operands.push_back(descriptor);
    }

    const auto outcomes = cli::run_batch(command, operands, opts);
    if (table) {
        std::cout << cli::render_table(command, outcomes);
    } else {
        for (const auto& o : outcomes) std::cout << cli::render_json(o) << '\n';
    }
    for (const auto& o : outcomes)
        if (o.record.contains("error")) std::cerr << o.record["error"]["message"].get<std::string>() << '\n';
    return cli::combined_exit_code(outcomes);
}
