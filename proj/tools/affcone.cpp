#include "commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using affcone::cli::RunConfig;

namespace {

void common_options(CLI::App* sub, RunConfig& c)
{
    sub->add_option("--type", c.type, "untwisted affine type, e.g. A1~")->capture_default_str();
    sub->add_option("--max-len", c.max_len,
                    "length bound of the Schubert table (default 8 for rank 1, 6 otherwise; member and saturate "
                    "size it to the certificate)");
    sub->add_option("--depth", c.depth, "delta-depth of the weight tables")->capture_default_str();
    sub->add_option("--jobs", c.jobs, "worker threads")->capture_default_str();
    sub->add_option("--out", c.out, "write the JSON document here instead of stdout");
}

void triple_options(CLI::App* sub, RunConfig& c)
{
    sub->add_option("--lambda1", c.lambda1, "weight, e.g. '2*L0 + L1'");
    sub->add_option("--lambda2", c.lambda2, "weight");
    sub->add_option("--mu", c.mu, "weight, e.g. '3*L0 + L1 - 2*delta'");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Saturated tensor cones, deformed Schubert products and tensor multiplicities "
                 "for untwisted affine Kac-Moody algebras"};
    app.require_subcommand(1);
    RunConfig c;

    auto* ineq = app.add_subcommand("inequalities", "list the inequalities with l(v) <= max_len");
    common_options(ineq, c);

    auto* member = app.add_subcommand("member", "decide membership in the cone");
    common_options(member, c);
    triple_options(member, c);
    member->add_option("--triple", c.triples, "'lambda1 ; lambda2 ; mu', repeatable");

    auto* mult = app.add_subcommand("multiplicity", "tensor product multiplicity");
    common_options(mult, c);
    triple_options(mult, c);

    auto* b0 = app.add_subcommand("b0", "largest b with L(mu + b delta) in the product");
    common_options(b0, c);
    triple_options(b0, c);
    b0->add_option("--window", c.window, "number of delta steps searched")->capture_default_str();

    auto* sat = app.add_subcommand("saturate", "check the stretched multiplicity predicted by saturation");
    common_options(sat, c);
    triple_options(sat, c);
    sat->add_option("--d", c.d, "stretch or delta shift, at least 2")->capture_default_str();
    sat->add_option("--mode", c.mode, "stretch or delta-shift")->capture_default_str();

    auto* sc = app.add_subcommand("structure-constants", "Schubert structure constants up to max_len");
    common_options(sc, c);
    sc->add_option("--node", c.node, "maximal parabolic P_i; omit for G/B");

    auto* self = app.add_subcommand("selfcheck", "compare the library with its oracles");
    common_options(self, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : affcone::cli::kInvalidInput;
    }
    c.command = app.get_subcommands().front()->get_name();

    const auto result = affcone::cli::run_command(c);
    const std::string text = result.doc.dump(2) + "\n";
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out);
        if (!f) {
            std::cerr << "cannot write " << c.out << "\n";
            return affcone::cli::kInvalidInput;
        }
        f << text;
    }
    if (result.doc.contains("error")) std::cerr << result.doc["error"]["message"].get<std::string>() << "\n";
    return result.exit_code;
}
