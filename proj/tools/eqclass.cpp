// eqclass: equivariant characteristic classes and genera from fixed-point
// localization data.
//
// Exit codes: 0 success, 1 computation error (error JSON emitted),
// 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "eqclass/verify.hpp"

namespace {

using namespace eqclass;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw parse_error("bad JSON in '" + path + "': " + e.what());
    }
}

std::vector<long> parse_weight_list(const std::string& csv) {
    std::vector<long> w;
    std::string cur;
    std::istringstream is(csv);
    while (std::getline(is, cur, ',')) {
        try {
            w.push_back(std::stol(cur));
        } catch (const std::exception&) {
            throw parse_error("bad weight '" + cur + "'");
        }
    }
    if (w.empty()) throw parse_error("empty weight list");
    return w;
}

// input builders usable from a JobSpec document
LocalizationDatum build_input(const Json& input) {
    if (input.is_string()) return js::datum_from_json(read_json_file(input));
    if (!input.is_object()) throw parse_error("input must be object or path");
    if (input.contains("projective_space")) {
        const Json& p = input.at("projective_space");
        return build_projective_datum(
            p.at("n").get<int>(), p.at("weights").get<std::vector<long>>(),
            p.at("conductor").get<long>());
    }
    if (input.contains("wproj_cover")) {
        return build_wproj_cover_datum(
            input.at("wproj_cover").at("weights").get<std::vector<long>>());
    }
    if (input.contains("product")) {
        const Json& factors = input.at("product");
        if (!factors.is_array() || factors.empty())
            throw parse_error("product needs a non-empty factor list");
        LocalizationDatum d = build_input(factors[0]);
        for (size_t i = 1; i < factors.size(); ++i)
            d = exterior_product(d, build_input(factors[i]));
        return d;
    }
    if (input.contains("raw")) return js::datum_from_json(input.at("raw"));
    throw parse_error(
        "input needs projective_space | wproj_cover | product | raw");
}

struct Sink {
    std::string output_path;
    int write(const std::string& text) const {
        if (output_path.empty()) {
            std::cout << text;
            return 0;
        }
        std::ofstream out(output_path);
        if (!out) {
            std::cerr << "cannot write '" << output_path << "'\n";
            return 2;
        }
        out << text;
        return 0;
    }
    int write_json(const Json& j) const { return write(j.dump(2) + "\n"); }
};

Json genus_entry(const std::string& element, const YCoeff& genus) {
    return Json{{"element", element},
                {"genus", js::ycoeff_to_json(genus)},
                {"display", js::pretty_ycoeff(genus)}};
}

std::vector<std::string> selected_elements(const LocalizationDatum& d,
                                           const std::string& element) {
    if (element == "all") return d.group.elements;
    d.group.index(element);
    return {element};
}

int cmd_genus(const LocalizationDatum& d, const std::string& element,
              const TwistData* twist, const std::string& y_value,
              const std::string& format, const Sink& sink) {
    Json results = Json::array();
    std::string pretty;
    for (const auto& g : selected_elements(d, element)) {
        YCoeff genus = equivariant_chi_y(d, g, twist);
        Json entry = genus_entry(g, genus);
        if (!y_value.empty()) {
            Cyclotomic v = genus.specialize(parse_rational(y_value));
            entry["value_at_y"] = js::cyclotomic_to_json(v);
            entry["value_display"] = js::pretty_cyclotomic(v);
        }
        pretty += "chi_y(X;" + g + ") = " + js::pretty_ycoeff(genus) + "\n";
        results.push_back(std::move(entry));
    }
    if (format == "pretty") return sink.write(pretty);
    return sink.write_json(Json{{"command", "genus"}, {"results", results}});
}

int cmd_class(const LocalizationDatum& d, const std::string& element,
              bool normalized, const std::string& format, const Sink& sink) {
    Json results = Json::array();
    std::string pretty;
    for (const auto& g : selected_elements(d, element)) {
        Json comps = Json::array();
        for (const auto& c : d.components(g)) {
            TruncSeries cls = atiyah_singer_class(c, normalized);
            comps.push_back(Json{{"component", c.label},
                                 {"series", js::series_to_json(cls)}});
            pretty += (normalized ? "T_y*(X;" : "T~_y*(X;") + g + ")|" +
                      c.label + " =\n" + js::pretty_series(cls) + "\n";
        }
        results.push_back(Json{{"element", g}, {"classes", comps}});
    }
    if (format == "pretty") return sink.write(pretty);
    return sink.write_json(Json{{"command", "class"},
                                {"normalized", normalized},
                                {"results", results}});
}

int cmd_quotient_genus(const LocalizationDatum& d, const std::string& format,
                       const Sink& sink) {
    YCoeff q = chi_y_quotient(d);
    if (format == "pretty")
        return sink.write("chi_y(X/G) = " + js::pretty_ycoeff(q) + "\n");
    return sink.write_json(Json{{"command", "quotient-genus"},
                                {"genus", js::ycoeff_to_json(q)},
                                {"display", js::pretty_ycoeff(q)}});
}

int cmd_wproj_class(const std::vector<long>& weights, bool normalized,
                    const std::string& format, const Sink& sink) {
    WeightVector w(std::vector<long>(weights));
    TruncSeries cls = wproj_class(w, normalized);
    YCoeff genus = wproj_genus(w);
    if (format == "pretty")
        return sink.write("pullback class on P^" + std::to_string(w.dim()) +
                          ":\n" + js::pretty_series(cls) +
                          "\nquotient degree = " + js::pretty_ycoeff(genus) +
                          "\n");
    return sink.write_json(Json{{"command", "wproj-class"},
                                {"weights", weights},
                                {"normalized", normalized},
                                {"series", js::series_to_json(cls)},
                                {"display", js::pretty_series(cls)},
                                {"degree", js::ycoeff_to_json(genus)},
                                {"degree_display", js::pretty_ycoeff(genus)}});
}

int cmd_defect(const Json& input, const std::string& format, const Sink& sink) {
    IsolatedDefectDatum d = js::defect_from_json(input);
    long order = input.at("group_order").get<long>();
    YCoeff v = defect_sum(d, order);
    if (format == "pretty")
        return sink.write("defect = " + js::pretty_ycoeff(v) + "\n");
    return sink.write_json(Json{{"command", "defect"},
                                {"defect", js::ycoeff_to_json(v)},
                                {"display", js::pretty_ycoeff(v)}});
}

int cmd_specialize(const Json& input, const std::string& y_value,
                   const std::string& format, const Sink& sink) {
    Json payload = input.contains("genus") ? input.at("genus") : input;
    YCoeff c = js::ycoeff_from_json(payload);
    Cyclotomic v = c.specialize(parse_rational(y_value));
    if (format == "pretty")
        return sink.write(js::pretty_cyclotomic(v) + "\n");
    return sink.write_json(Json{{"command", "specialize"},
                                {"y", y_value},
                                {"value", js::cyclotomic_to_json(v)},
                                {"display", js::pretty_cyclotomic(v)}});
}

int cmd_verify(const Sink& sink) {
    std::string out;
    bool all_passed = true;
    for (const auto& c : verify::run_acceptance_suite()) {
        out += (c.passed ? "PASS " : "FAIL ") + c.name +
               (c.detail.empty() ? "" : " — " + c.detail) + "\n";
        all_passed = all_passed && c.passed;
    }
    out += all_passed ? "verify: all criteria passed\n"
                      : "verify: FAILURES present\n";
    int rc = sink.write(out);
    if (rc != 0) return rc;
    return all_passed ? 0 : 1;
}

TwistData parse_twist_file(const std::string& path,
                           const LocalizationDatum& d,
                           const std::string& element) {
    Json j = read_json_file(path);
    const Json& map = j.contains("twist") ? j.at("twist") : j;
    TwistData t;
    for (const auto& c : d.components(element)) {
        if (!map.contains(c.label))
            throw parse_error("twist file missing component '" + c.label +
                              "'");
        t.emplace(c.label, js::bundle_from_json(map.at(c.label), c.ring));
    }
    return t;
}

// full JobSpec document; the flag-based subcommands assemble one of these
int run_job(const Json& job) {
    std::string command = job.at("command").get<std::string>();
    Sink sink{job.value("output", std::string())};
    std::string format = job.value("format", std::string("json"));
    if (format != "json" && format != "pretty")
        throw parse_error("format must be json or pretty");
    if (command == "verify") return cmd_verify(sink);
    if (command == "wproj-class") {
        const Json& input = job.at("input");
        std::vector<long> weights =
            input.contains("wproj")
                ? input.at("wproj").at("weights").get<std::vector<long>>()
                : input.at("weights").get<std::vector<long>>();
        return cmd_wproj_class(weights, job.value("normalized", true), format,
                               sink);
    }
    if (command == "defect") {
        Json input = job.at("input").is_string()
                         ? read_json_file(job.at("input"))
                         : job.at("input");
        return cmd_defect(input, format, sink);
    }
    if (command == "specialize") {
        Json input = job.at("input").is_string()
                         ? read_json_file(job.at("input"))
                         : job.at("input");
        return cmd_specialize(input, job.at("y_value").get<std::string>(),
                              format, sink);
    }
    LocalizationDatum d = build_input(job.at("input"));
    if (command == "quotient-genus") return cmd_quotient_genus(d, format, sink);
    std::string element = job.value("element", std::string("all"));
    if (command == "genus") {
        TwistData twist;
        bool have_twist = false;
        if (job.contains("twist")) {
            if (element == "all")
                throw parse_error("twist requires a single element");
            twist = parse_twist_file(job.at("twist").get<std::string>(), d,
                                     element);
            have_twist = true;
        }
        return cmd_genus(d, element, have_twist ? &twist : nullptr,
                         job.value("y_value", std::string()), format, sink);
    }
    if (command == "class")
        return cmd_class(d, element, job.value("normalized", true), format,
                         sink);
    throw parse_error("unknown command '" + command + "'");
}

Json builder_input_from_flags(const std::string& builder, int n,
                              const std::string& weights, long conductor,
                              const std::string& input_path) {
    if (!input_path.empty()) return Json(input_path);
    if (builder == "projective-space") {
        if (weights.empty()) throw parse_error("--weights required");
        return Json{{"projective_space",
                     {{"n", n},
                      {"weights", parse_weight_list(weights)},
                      {"conductor", conductor}}}};
    }
    if (builder == "wproj-cover") {
        if (weights.empty()) throw parse_error("--weights required");
        return Json{{"wproj_cover", {{"weights", parse_weight_list(weights)}}}};
    }
    throw parse_error("need --input or --builder "
                      "projective-space|wproj-cover");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant characteristic classes from localization data"};
    app.require_subcommand(1);

    std::string input_path, builder, weights, element = "all", y_value,
                twist_path, output, format = "json", job_path,
                suite = "all";
    int n = 1;
    long conductor = 1;
    bool normalized = true, unnormalized = false;

    auto add_io = [&](CLI::App* c) {
        c->add_option("--output", output, "write the artifact here");
        c->add_option("--format", format, "json or pretty");
    };
    auto add_input = [&](CLI::App* c) {
        c->add_option("--input", input_path, "localization datum JSON file");
        c->add_option("--builder", builder,
                      "projective-space | wproj-cover");
        c->add_option("--n", n, "projective dimension");
        c->add_option("--weights", weights, "comma-separated weights");
        c->add_option("--conductor", conductor, "cyclic group order");
        add_io(c);
    };

    CLI::App* genus = app.add_subcommand("genus", "equivariant chi_y-genus");
    add_input(genus);
    genus->add_option("--element", element, "group element label or 'all'");
    genus->add_option("--twist", twist_path, "per-component bundle JSON");
    genus->add_option("--y", y_value, "also specialize at this y");

    CLI::App* cls = app.add_subcommand("class", "Atiyah-Singer classes");
    add_input(cls);
    cls->add_option("--element", element, "group element label or 'all'");
    cls->add_flag("--normalized", normalized, "normalized classes (default)");
    cls->add_flag("--unnormalized", unnormalized, "un-normalized classes");

    CLI::App* quot =
        app.add_subcommand("quotient-genus", "averaged chi_y of X/G");
    add_input(quot);

    CLI::App* wp = app.add_subcommand(
        "wproj-class", "pulled-back Hirzebruch class of P^n(w)");
    wp->add_option("--weights", weights, "comma-separated positive weights")
        ->required();
    wp->add_flag("--normalized", normalized, "normalized class (default)");
    wp->add_flag("--unnormalized", unnormalized, "un-normalized class");
    add_io(wp);

    CLI::App* def =
        app.add_subcommand("defect", "isolated-fixed-point defect sum");
    def->add_option("--input", input_path, "defect datum JSON")->required();
    add_io(def);

    CLI::App* spec =
        app.add_subcommand("specialize", "evaluate a stored value at y");
    spec->add_option("--input", input_path, "ycoeff or genus JSON")
        ->required();
    spec->add_option("--y", y_value, "rational y value")->required();
    add_io(spec);

    CLI::App* ver = app.add_subcommand("verify", "run the acceptance checks");
    ver->add_option("--suite", suite, "which suite (all)");
    add_io(ver);

    CLI::App* jobc = app.add_subcommand("run", "execute a JobSpec document");
    jobc->add_option("--job", job_path, "JobSpec JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Json job;
        if (jobc->parsed()) {
            job = read_json_file(job_path);
        } else if (ver->parsed()) {
            if (suite != "all") throw parse_error("unknown suite");
            job = Json{{"command", "verify"}};
            if (!output.empty()) job["output"] = output;
        } else if (wp->parsed()) {
            job = Json{{"command", "wproj-class"},
                       {"input", Json{{"weights", parse_weight_list(weights)}}},
                       {"normalized", normalized && !unnormalized}};
        } else if (def->parsed()) {
            job = Json{{"command", "defect"}, {"input", input_path}};
        } else if (spec->parsed()) {
            job = Json{{"command", "specialize"},
                       {"input", input_path},
                       {"y_value", y_value}};
        } else {
            std::string command = genus->parsed() ? "genus"
                                  : cls->parsed() ? "class"
                                                  : "quotient-genus";
            job = Json{{"command", command},
                       {"input", builder_input_from_flags(
                                     builder, n, weights, conductor,
                                     input_path)},
                       {"element", element},
                       {"normalized", normalized && !unnormalized}};
            if (!y_value.empty()) job["y_value"] = y_value;
            if (!twist_path.empty()) job["twist"] = twist_path;
        }
        if (!jobc->parsed()) {
            if (!output.empty()) job["output"] = output;
            job["format"] = format;
        }
        return run_job(job);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_weights& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        Json err{{"error", e.code()}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
