// fsigma — exact computations in Thompson's group F: elements in word,
// breakpoint and tree-pair form, Sigma invariant classifiers, and the
// Cayley-ball sublevel explorer.  Exit codes: 0 success, 2 invalid
// input, 3 resource budget exceeded.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fsigma/explorer.hpp"
#include "fsigma/parse.hpp"
#include "fsigma/report.hpp"

namespace {

using namespace fsigma;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceLimit = 3;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

Character parse_char_option(const std::string& s) {
    auto parts = split_commas(s);
    if (parts.size() != 2)
        throw std::invalid_argument("--char expects two comma-separated rationals, e.g. 1,1");
    return Character{parse_rational(parts[0]), parse_rational(parts[1])};
}

ProductCharacter parse_coords_option(const std::string& s) {
    std::vector<Rational> coords;
    for (const auto& p : split_commas(s)) coords.push_back(parse_rational(p));
    return ProductCharacter(std::move(coords));
}

Subdivision parse_cuts_option(const std::string& s) {
    std::vector<Dyadic> cuts;
    for (const auto& p : split_commas(s)) cuts.push_back(parse_dyadic(p));
    unsigned parts = static_cast<unsigned>(cuts.size()) + 1;
    return Subdivision(parts, std::move(cuts));
}

std::string join_args(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += ' ';
        s += p;
    }
    return s;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw std::invalid_argument("unsupported format: " + format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact computations in Thompson's group F: elements, Sigma classifiers, "
        "Cayley-ball explorer"};
    app.require_subcommand(1);

    std::vector<std::string> element_args;
    std::string element_opt, lhs_arg, rhs_arg;
    std::string char_opt, coords_opt, cuts_opt;
    std::string out_path, eval_format, ball_format, sublevel_format;
    unsigned radius = 0, extend = 0, iterations = 20, max_n = 32, max_index = 8, r_opt = 0;
    std::size_t max_vertices = kDefaultVertexBudget;
    bool with_kernel = false;

    auto* eval_cmd = app.add_subcommand(
        "eval", "Evaluate an element (word, breakpoints, or tree pair) and print all forms");
    eval_cmd->add_option("element", element_args, "element literal")->required();
    eval_cmd->add_option("--format", eval_format, "json")->default_val("json");

    auto* nf_cmd = app.add_subcommand("nf", "Print the normal form of an element");
    nf_cmd->add_option("element", element_args, "element literal")->required();

    auto* equal_cmd = app.add_subcommand("equal", "Decide equality of two elements");
    equal_cmd->add_option("lhs", lhs_arg, "first element")->required();
    equal_cmd->add_option("rhs", rhs_arg, "second element")->required();

    auto* classify_cmd =
        app.add_subcommand("classify", "Sigma verdict for a character a*chi0 + b*chi1");
    classify_cmd->add_option("--char", char_opt, "a,b")->required();
    classify_cmd->add_flag("--kernel", with_kernel, "include the kernel finiteness report");

    auto* kernel_cmd =
        app.add_subcommand("kernel", "Kernel finiteness report for a discrete character");
    kernel_cmd->add_option("--char", char_opt, "a,b")->required();

    auto* product_cmd = app.add_subcommand("classify-product",
                                           "Skeleton verdict for a character on F^r");
    product_cmd->add_option("--r", r_opt, "number of factors")->required();
    product_cmd->add_option("--coords", coords_opt, "a1,b1,...,ar,br")->required();
    product_cmd->add_flag("--kernel", with_kernel, "include the kernel finiteness report");

    auto* gr_cmd = app.add_subcommand(
        "gr-test", "Derivative-product membership test for G_r at the given cuts");
    gr_cmd->add_option("--cuts", cuts_opt, "comma-separated dyadic cut points")->required();
    gr_cmd->add_option("--element", element_opt, "element literal")->required();

    auto* ball_cmd = app.add_subcommand("ball", "Build a Cayley ball and emit it");
    ball_cmd->add_option("--radius", radius, "ball radius")->required();
    ball_cmd->add_option("--max-vertices", max_vertices, "vertex budget");
    ball_cmd->add_option("--char", char_opt, "mark sublevel vertices for this character");
    ball_cmd->add_option("--out", out_path, "output file (default stdout)");
    ball_cmd->add_option("--format", ball_format, "dot or json")->default_val("dot");

    auto* sublevel_cmd = app.add_subcommand(
        "sublevel", "Components of the chi >= 0 sublevel set of B_n inside B_N");
    sublevel_cmd->add_option("--char", char_opt, "a,b")->required();
    sublevel_cmd->add_option("--radius", radius, "inner radius n")->required();
    sublevel_cmd->add_option("--extend", extend, "outer radius N (default n)");
    sublevel_cmd->add_option("--max-vertices", max_vertices, "vertex budget");
    sublevel_cmd->add_option("--out", out_path, "output file (default stdout)");
    sublevel_cmd->add_option("--format", sublevel_format, "csv or json")->default_val("csv");

    auto* orbit_cmd = app.add_subcommand(
        "orbit", "Endpoint-neighborhood orbit report for a non-identity element");
    orbit_cmd->add_option("--element", element_opt, "element literal")->required();
    orbit_cmd->add_option("--iterations", iterations, "iteration count")->default_val(20);

    auto* witness_cmd = app.add_subcommand(
        "witness", "Least n with x0^-n g x0^n in F(1), for g killed by the slope-at-0 character");
    witness_cmd->add_option("--element", element_opt, "element literal")->required();
    witness_cmd->add_option("--max", max_n, "largest depth to try")->default_val(32);

    auto* relations_cmd = app.add_subcommand(
        "relations", "Check x_i^-1 x_n x_i = x_{n+1} for all relations up to a generator index");
    relations_cmd->add_option("--max", max_index, "largest generator index involved")
        ->default_val(8);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (*eval_cmd) {
            require_format(eval_format, {"json"});
            Element g = parse_element(join_args(element_args));
            write_output(element_json(g).dump() + "\n", out_path);
        } else if (*nf_cmd) {
            Element g = parse_element(join_args(element_args));
            Json j;
            j["normal_form"] = to_string(to_word(normal_form(g.pair)));
            j["schema_version"] = kSchemaVersion;
            write_output(j.dump() + "\n", out_path);
        } else if (*equal_cmd) {
            Element a = parse_element(lhs_arg);
            Element b = parse_element(rhs_arg);
            Json j;
            j["equal"] = a == b;
            j["schema_version"] = kSchemaVersion;
            write_output(j.dump() + "\n", out_path);
        } else if (*classify_cmd) {
            write_output(classify_json(parse_char_option(char_opt), with_kernel).dump() + "\n",
                         out_path);
        } else if (*kernel_cmd) {
            Character chi = parse_char_option(char_opt);
            FinitenessReport k = kernel_finiteness_F(chi);
            Json j;
            j["char"] = Json::array({json_rational(chi.a), json_rational(chi.b)});
            j["kernel_type"] = kernel_token(k);
            j["kernel_description"] = describe(k);
            j["discrete"] = k.discrete;
            j["schema_version"] = kSchemaVersion;
            write_output(j.dump() + "\n", out_path);
        } else if (*product_cmd) {
            ProductCharacter chi = parse_coords_option(coords_opt);
            if (chi.r() != r_opt)
                throw std::invalid_argument("--coords length must equal 2*r");
            write_output(product_classify_json(chi, with_kernel).dump() + "\n", out_path);
        } else if (*gr_cmd) {
            Subdivision sub = parse_cuts_option(cuts_opt);
            Element g = parse_element(element_opt);
            write_output(gr_json(sub, gr_membership(g.map, sub)).dump() + "\n", out_path);
        } else if (*ball_cmd) {
            require_format(ball_format, {"dot", "json"});
            BallGraph ball = build_ball(radius, max_vertices);
            std::optional<Character> chi;
            if (!char_opt.empty()) chi = parse_char_option(char_opt);
            if (ball_format == "dot")
                write_output(ball_dot(ball, chi), out_path);
            else
                write_output(ball_summary_json(ball).dump() + "\n", out_path);
        } else if (*sublevel_cmd) {
            require_format(sublevel_format, {"csv", "json"});
            if (!sublevel_cmd->count("--extend")) extend = radius;
            if (extend < radius)
                throw std::invalid_argument("--extend must be at least --radius");
            Character chi = parse_char_option(char_opt);
            BallGraph ball = build_ball(extend, max_vertices);
            ComponentReport report = sublevel_components(ball, radius, chi);
            if (sublevel_format == "csv")
                write_output(components_csv({report}), out_path);
            else
                write_output(component_report_json(report).dump() + "\n", out_path);
        } else if (*orbit_cmd) {
            Element g = parse_element(element_opt);
            write_output(orbit_json(support_dynamics(g.map, iterations)).dump() + "\n",
                         out_path);
        } else if (*witness_cmd) {
            Element g = parse_element(element_opt);
            write_output(witness_json(max_n, ascending_union_witness(g.map, max_n)).dump() +
                             "\n",
                         out_path);
        } else if (*relations_cmd) {
            write_output(relations_json(check_relations(max_index)).dump() + "\n", out_path);
        }
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}
