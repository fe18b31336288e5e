#include "normalmt/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace nmt {

using nlohmann::json;

namespace {

json stencil_to_json(const std::map<int, Rational>& st) {
    json out = json::array();
    for (const auto& [k, c] : st) out.push_back({k, c.str()});
    return out;
}

std::map<int, Rational> stencil_from_json(const json& j) {
    std::map<int, Rational> out;
    for (const auto& entry : j)
        out.emplace(entry.at(0).get<int>(), Rational::parse(entry.at(1).get<std::string>()));
    return out;
}

std::string format_order(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

json scheme_to_json(const Scheme& s) {
    json j;
    j["label"] = s.label;
    j["shift"] = s.shift ? json(s.shift->str()) : json(nullptr);
    j["even"] = stencil_to_json(s.even);
    j["odd"] = stencil_to_json(s.odd);
    return j;
}

Scheme scheme_from_json(const json& j) {
    Scheme s;
    s.label = j.at("label").get<std::string>();
    if (j.contains("shift") && !j.at("shift").is_null())
        s.shift = Rational::parse(j.at("shift").get<std::string>());
    s.even = stencil_from_json(j.at("even"));
    s.odd = stencil_from_json(j.at("odd"));
    return s;
}

json config_to_json(const TransformConfig& c) {
    json j;
    j["p"] = c.p;
    j["normals"] = c.effective_normal_spec();
    if (c.tangential_spec) j["combined"] = *c.tangential_spec;
    j["levels"] = c.levels;
    j["window"] = c.effective_window();
    j["root_tol"] = c.root_tol;
    return j;
}

TransformConfig config_from_json(const json& j) {
    TransformConfig c;
    c.p = j.at("p").get<int>();
    c.normal_spec = j.value("normals", std::string());
    if (j.contains("combined")) c.tangential_spec = j.at("combined").get<std::string>();
    c.levels = j.value("levels", 0);
    c.window = j.value("window", 0);
    c.root_tol = j.value("root_tol", 1e-13);
    return c;
}

json decomposition_to_json(const Decomposition& dec) {
    json j;
    j["config"] = config_to_json(dec.config);
    json pts = json::array();
    for (const Point2& p : dec.base_points.values) pts.push_back({p.x, p.y});
    j["base_points"] = pts;
    j["details"] = dec.details;
    return j;
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition dec;
    dec.config = config_from_json(j.at("config"));
    for (const auto& pt : j.at("base_points"))
        dec.base_points.values.push_back({pt.at(0).get<double>(), pt.at(1).get<double>()});
    dec.details = j.at("details").get<std::vector<std::vector<double>>>();
    const long long n0 = dec.base_points.period();
    for (size_t lvl = 0; lvl < dec.details.size(); ++lvl) {
        const long long expect = n0 << (lvl + 1);
        if (static_cast<long long>(dec.details[lvl].size()) != expect)
            throw std::runtime_error("detail level " + std::to_string(lvl + 1) +
                                     " has wrong length");
    }
    return dec;
}

void save_decomposition(const std::string& path, const Decomposition& dec) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << decomposition_to_json(dec).dump(1) << "\n";
}

Decomposition load_decomposition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    json j;
    in >> j;
    return decomposition_from_json(j);
}

json curve_to_json(const Curve& c) {
    json j;
    if (const auto* circle = dynamic_cast<const Circle*>(&c)) {
        j["kind"] = "circle";
        j["r"] = circle->radius();
        if (circle->center().x != 0.0 || circle->center().y != 0.0)
            j["center"] = {circle->center().x, circle->center().y};
    } else if (const auto* ellipse = dynamic_cast<const Ellipse*>(&c)) {
        j["kind"] = "ellipse";
        j["a"] = ellipse->a();
        j["b"] = ellipse->b();
        if (ellipse->center().x != 0.0 || ellipse->center().y != 0.0)
            j["center"] = {ellipse->center().x, ellipse->center().y};
    } else if (const auto* trig = dynamic_cast<const TrigCurve*>(&c)) {
        j["kind"] = "trig";
        j["cx"] = trig->cx();
        j["sx"] = trig->sx();
        j["cy"] = trig->cy();
        j["sy"] = trig->sy();
    } else {
        throw std::runtime_error("unknown curve kind");
    }
    return j;
}

std::unique_ptr<Curve> curve_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    Point2 center{0.0, 0.0};
    if (j.contains("center"))
        center = {j["center"].at(0).get<double>(), j["center"].at(1).get<double>()};
    if (kind == "circle") return std::make_unique<Circle>(center, j.value("r", 1.0));
    if (kind == "ellipse")
        return std::make_unique<Ellipse>(center, j.at("a").get<double>(), j.at("b").get<double>());
    if (kind == "trig")
        return std::make_unique<TrigCurve>(j.value("cx", std::vector<double>{}),
                                           j.value("sx", std::vector<double>{}),
                                           j.value("cy", std::vector<double>{}),
                                           j.value("sy", std::vector<double>{}));
    throw std::runtime_error("unknown curve kind '" + kind + "'");
}

std::unique_ptr<Curve> curve_from_spec(const std::string& spec) {
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::runtime_error("cannot read curve spec '" + spec.substr(1) + "'");
        json j;
        in >> j;
        return curve_from_json(j);
    }
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "circle")
        return std::make_unique<Circle>(Point2{0.0, 0.0}, args.empty() ? 1.0 : std::stod(args));
    if (kind == "ellipse") {
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("ellipse spec needs two semi-axes, e.g. ellipse:2,1");
        return std::make_unique<Ellipse>(Point2{0.0, 0.0}, std::stod(args.substr(0, comma)),
                                         std::stod(args.substr(comma + 1)));
    }
    throw std::runtime_error("unknown curve spec '" + spec + "'");
}

std::string decay_table_csv(const DecayTable& table) {
    std::ostringstream out;
    out << "j,norm,order_cumulative,order_ratio\n";
    for (const DecayRow& r : table.rows)
        out << r.j << "," << format_full(r.norm) << "," << format_full(r.order_cumulative) << ","
            << format_full(r.order_ratio) << "\n";
    return out.str();
}

std::string points_csv(const PeriodicSequence<Point2>& points) {
    std::ostringstream out;
    out << "index,x,y\n";
    for (size_t i = 0; i < points.values.size(); ++i)
        out << i << "," << format_full(points.values[i].x) << "," << format_full(points.values[i].y)
            << "\n";
    return out.str();
}

std::string diagnostics_csv(const Decomposition& dec) {
    std::ostringstream out;
    out << "j,index,s,omega\n";
    for (size_t j = 1; j < dec.arclen_levels.size(); ++j) {
        const auto& s = dec.arclen_levels[j].values;
        const auto& w = dec.offset_levels[j - 1];
        for (size_t k = 0; k < s.size(); ++k)
            out << j << "," << k << "," << format_full(s[k]) << "," << format_full(w[k]) << "\n";
    }
    return out.str();
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream out;
    out << "run";
    if (!rows.empty())
        for (size_t j = 1; j <= rows.front().order_cumulative.size(); ++j) out << ",j" << j;
    out << "\n";
    for (const ExperimentRow& row : rows) {
        out << "\"" << row.label << "\"";
        for (double v : row.order_cumulative) out << "," << format_order(v);
        out << "\n";
    }
    return out.str();
}

std::string normal_accuracy_csv(const NormalAccuracyReport& report) {
    std::ostringstream out;
    out << "j,max_abs_xi_minus_s\n";
    for (const auto& [j, v] : report.per_level) out << j << "," << format_full(v) << "\n";
    return out.str();
}

}  // namespace nmt
