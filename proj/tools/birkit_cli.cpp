#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "birkit/families.hpp"
#include "birkit/report.hpp"
#include "birkit/scenarios.hpp"

using namespace birkit;

namespace {

int exit_code = 0;

void emit(const Json& j, const std::string& json_path) {
    std::string text = j.dump(2);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << text << "\n";
    }
    std::cout << text << "\n";
}

RatBirationalMap require_rational(const MapLiteral& lit, bool reduce_tuple = true) {
    if (!std::holds_alternative<RatMapTuple>(lit.tuple))
        throw BadParams("this command needs --field QQ");
    const auto& t = std::get<RatMapTuple>(lit.tuple);
    return reduce_tuple ? reduce(t).map : RatBirationalMap::from_tuple(t, false);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"birkit: birational transformations of projective space, with convergence "
                 "diagnostics and finite-order identity gates"};
    app.require_subcommand(1);

    std::string field_text = "QQ";
    app.add_option("--field", field_text, "coefficient field: QQ | RR | CC | Qp:<p>:<prec>");

    // compose
    auto* cmd_compose = app.add_subcommand("compose", "compose two maps (reduced over QQ)");
    std::string comp_a, comp_b;
    cmd_compose->add_option("f", comp_a, "outer map literal")->required();
    cmd_compose->add_option("g", comp_b, "inner map literal")->required();

    // order
    auto* cmd_order = app.add_subcommand("order", "smallest k <= dmax with f^k = id");
    std::string order_map;
    int dmax = 20;
    cmd_order->add_option("f", order_map, "map literal")->required();
    cmd_order->add_option("--dmax", dmax, "iteration bound");

    // eval
    auto* cmd_eval = app.add_subcommand("eval", "evaluate a map at a projective point");
    std::string eval_map, eval_point_text;
    cmd_eval->add_option("f", eval_map, "map literal")->required();
    cmd_eval->add_option("point", eval_point_text, "point literal, e.g. [0:1:1]")->required();

    // limit
    auto* cmd_limit = app.add_subcommand("limit", "sequence limit of map literals (one per line)");
    std::string limit_file = "-", limit_json;
    cmd_limit->add_option("file", limit_file, "input file, or - for stdin");
    cmd_limit->add_option("--json", limit_json, "also write the report to this file");

    // certify-inverse
    auto* cmd_cert = app.add_subcommand("certify-inverse", "check g is the inverse of f, exactly");
    std::string cert_a, cert_b;
    cmd_cert->add_option("f", cert_a)->required();
    cmd_cert->add_option("g", cert_b)->required();

    // padic-gate
    auto* cmd_gate = app.add_subcommand("padic-gate", "run the p-adic identity gate on a map");
    std::string gate_map, gate_alpha, gate_json;
    long long gate_p = 3;
    int gate_prec = 12, gate_bound = 6;
    cmd_gate->add_option("f", gate_map, "map literal over QQ")->required();
    cmd_gate->add_option("--p", gate_p, "prime");
    cmd_gate->add_option("--prec", gate_prec, "digits of precision");
    cmd_gate->add_option("--order-bound", gate_bound, "order bound D");
    cmd_gate->add_option("--alpha", gate_alpha, "affine conjugation (map literal, QQ)");
    cmd_gate->add_option("--json", gate_json, "also write the verdict to this file");

    // cloud
    auto* cmd_cloud = app.add_subcommand("cloud", "indeterminacy cloud of the oscillating family");
    double cloud_eps = 0.1;
    int cloud_count = 1000, cloud_depth = 6, cloud_net = 10000;
    std::string cloud_json, cloud_csv;
    cmd_cloud->add_option("--eps", cloud_eps, "parameter window (0, eps)");
    cmd_cloud->add_option("--count", cloud_count, "number of samples");
    cmd_cloud->add_option("--depth", cloud_depth, "curve depth");
    cmd_cloud->add_option("--net", cloud_net, "reference net size");
    cmd_cloud->add_option("--json", cloud_json, "also write the report to this file");
    cmd_cloud->add_option("--csv", cloud_csv, "dump cloud points as CSV");

    // scenario
    auto* cmd_scn = app.add_subcommand("scenario", "run a named scenario");
    std::string scn_name, scn_json;
    unsigned scn_seed = 0;
    bool scn_list = false;
    cmd_scn->add_option("name", scn_name, "scenario name");
    cmd_scn->add_option("--seed", scn_seed, "random seed");
    cmd_scn->add_option("--json", scn_json, "also write the report to this file");
    cmd_scn->add_flag("--list", scn_list, "list registered scenarios");

    try {
        app.parse(argc, argv);
        FieldSpec field = FieldSpec::parse(field_text);

        if (*cmd_compose) {
            auto a = parse_map(comp_a, field);
            auto b = parse_map(comp_b, field);
            if (field.tag == FieldTag::QQ) {
                auto f = require_rational(a), g = require_rational(b);
                std::cout << print_map(compose(f, g).tuple()) << "\n";
            } else if (field.tag == FieldTag::CC) {
                const auto& ta = std::get<CxMapTuple>(a.tuple);
                const auto& tb = std::get<CxMapTuple>(b.tuple);
                std::cout << print_map(ta.substitute(tb)) << "\n";
            } else {
                throw BadParams("compose supports QQ (reduced) and CC (raw)");
            }
        } else if (*cmd_order) {
            auto f = require_rational(parse_map(order_map, FieldSpec{FieldTag::QQ, 0, 0}));
            auto r = order(f, dmax);
            if (r.finite)
                std::cout << "Finite(" << r.order << ")\n";
            else
                std::cout << "ExceedsBound(" << dmax << ")\n";
        } else if (*cmd_eval) {
            auto lit = parse_map(eval_map, field);
            auto pt = parse_point(eval_point_text, field);
            std::visit(
                [&](const auto& tuple) {
                    using Dom = std::decay_t<decltype(tuple.domain())>;
                    const auto& p = std::get<PointVec<Dom>>(pt);
                    auto f = BirationalMap<Dom>::from_tuple(tuple, false);
                    auto out = eval_point(f, p);
                    if (out.indeterminate)
                        std::cout << "Indeterminate\n";
                    else
                        std::cout << print_point(AnyPoint(out.point)) << "\n";
                },
                lit.tuple);
        } else if (*cmd_limit) {
            std::vector<CxMapTuple> seq;
            auto read_lines = [&](std::istream& in) {
                std::string line;
                while (std::getline(in, line)) {
                    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
                    auto lit = parse_map(line, field);
                    if (std::holds_alternative<RatMapTuple>(lit.tuple))
                        seq.push_back(to_complex(std::get<RatMapTuple>(lit.tuple)));
                    else if (std::holds_alternative<MapTuple<RealDomain>>(lit.tuple))
                        seq.push_back(to_complex(std::get<MapTuple<RealDomain>>(lit.tuple)));
                    else if (std::holds_alternative<CxMapTuple>(lit.tuple))
                        seq.push_back(std::get<CxMapTuple>(lit.tuple));
                    else
                        throw BadParams("limit supports QQ, RR and CC sequences");
                }
            };
            if (limit_file == "-") {
                read_lines(std::cin);
            } else {
                std::ifstream in(limit_file);
                if (!in) throw BadParams("cannot open " + limit_file);
                read_lines(in);
            }
            emit(to_json(sequence_limit(seq)), limit_json);
        } else if (*cmd_cert) {
            auto f = require_rational(parse_map(cert_a, FieldSpec{FieldTag::QQ, 0, 0}), false);
            auto g = require_rational(parse_map(cert_b, FieldSpec{FieldTag::QQ, 0, 0}), false);
            bool ok = certify_inverse(f, g).has_value();
            std::cout << (ok ? "true" : "false") << "\n";
            if (!ok) exit_code = 1;
        } else if (*cmd_gate) {
            PadicDomain dom{gate_p, gate_prec};
            auto f = require_rational(parse_map(gate_map, FieldSpec{FieldTag::QQ, 0, 0}), false);
            RatBirationalMap alpha = RatBirationalMap::identity(RationalDomain{}, f.n());
            if (!gate_alpha.empty()) {
                auto lit = parse_map(gate_alpha, FieldSpec{FieldTag::QQ, 0, 0});
                const auto& t = std::get<RatMapTuple>(lit.tuple);
                if (t.degree() != 1) throw BadParams("--alpha must be a linear map");
                std::vector<std::vector<Rat>> m(t.nvars(), std::vector<Rat>(t.nvars(), Rat(0)));
                for (int i = 0; i < t.nvars(); ++i) {
                    for (const auto& [e, c] : t.component(i).terms()) {
                        for (int j = 0; j < t.nvars(); ++j)
                            if (e[j] == 1) m[i][j] = c;
                    }
                }
                alpha = linear_map_certified(m);
            }
            auto chart = chart_normalize(f, alpha, dom);
            emit(to_json(identity_gate_padic(chart, gate_bound, f), dom.p), gate_json);
        } else if (*cmd_cloud) {
            auto cloud = indeterminacy_cloud(cloud_eps, cloud_count, cloud_depth, cloud_net);
            if (!cloud_csv.empty()) {
                std::ofstream csv(cloud_csv);
                csv << "re0,im0,re1,im1,re2,im2\n";
                for (const auto& q : cloud.points) {
                    csv << q[0].real() << "," << q[0].imag() << "," << q[1].real() << ","
                        << q[1].imag() << "," << q[2].real() << "," << q[2].imag() << "\n";
                }
            }
            emit(to_json(cloud, cloud_count <= 1000), cloud_json);
        } else if (*cmd_scn) {
            if (scn_list) {
                Json j = Json::array();
                for (const auto& info : scenario_registry())
                    j.push_back(Json{{"name", info.name}, {"description", info.description}});
                emit(j, scn_json);
            } else {
                if (scn_name.empty()) throw BadParams("scenario name required (or --list)");
                auto result = run_scenario(scn_name, scn_seed);
                emit(result.report, scn_json);
                if (!result.pass) exit_code = 1;
            }
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
