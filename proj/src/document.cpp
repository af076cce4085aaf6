#include "document.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "orthogonality.hpp"
#include "roots.hpp"

namespace kraw {

using json = nlohmann::ordered_json;

namespace {

constexpr int kDecimalDigits = 12;  // plain-mode display precision

std::optional<Method> method_of(const std::string& name) {
    if (name == "definition") return Method::definition;
    if (name == "gf") return Method::generating_function;
    if (name == "recurrence") return Method::recurrence;
    return std::nullopt;
}

std::string envelope(const char* command, json parameters, json payload) {
    json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["parameters"] = std::move(parameters);
    doc["payload"] = std::move(payload);
    return doc.dump(2) + "\n";
}

json coeff_strings(const UniPoly& p) {
    json arr = json::array();
    const long degree = p.degree();
    for (long k = 0; k <= std::max(degree, 0L); ++k)
        arr.push_back(p.coeff(static_cast<size_t>(k)).str());
    return arr;
}

std::string join_row(const std::vector<std::string>& cells, char sep) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i > 0)
            out += sep;
        out += cells[i];
    }
    out += '\n';
    return out;
}

std::string param_string(const ParamRecord& params) {
    std::string out;
    for (size_t i = 0; i < params.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += params[i].first + "=" + std::to_string(params[i].second);
    }
    return out;
}

json params_json(const ParamRecord& params) {
    json obj = json::object();
    for (const auto& [key, value] : params)
        obj[key] = value;
    return obj;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "plain") return Format::plain;
    return std::nullopt;
}

std::optional<Method> parse_method(std::string_view name) {
    return method_of(std::string(name));
}

std::string render_coeffs(long n, long s, long m, const std::string& method, Format format) {
    KrawtchoukParams params(n, s, m);
    const bool all = (method == "all");
    if (!all && !method_of(method))
        throw std::invalid_argument("coeffs: unknown method '" + method + "'");

    std::vector<std::pair<std::string, UniPoly>> polys;
    if (all) {
        polys.emplace_back("definition", poly_from_definition(params));
        polys.emplace_back("gf", poly_from_generating_function(params));
        polys.emplace_back("recurrence", poly_from_recurrence(params));
    } else {
        polys.emplace_back(method, construct(params, *method_of(method)));
    }
    const bool agree = polys.size() < 2 ||
                       (polys[0].second == polys[1].second && polys[1].second == polys[2].second);
    const long degree = polys[0].second.degree();

    switch (format) {
        case Format::json: {
            json parameters{{"n", n}, {"s", s}, {"m", m}, {"method", method}};
            json payload;
            payload["degree"] = degree;
            if (all) {
                json methods;
                for (const auto& [name, poly] : polys)
                    methods[name] = coeff_strings(poly);
                payload["methods"] = std::move(methods);
                payload["agree"] = agree;
            } else {
                payload["coefficients"] = coeff_strings(polys[0].second);
            }
            return envelope("coeffs", std::move(parameters), std::move(payload));
        }
        case Format::csv: {
            std::string out;
            std::vector<std::string> header{"power"};
            for (const auto& [name, poly] : polys)
                header.push_back(name);
            out += join_row(header, ',');
            for (long k = 0; k <= std::max(degree, 0L); ++k) {
                std::vector<std::string> row{std::to_string(k)};
                for (const auto& [name, poly] : polys)
                    row.push_back(poly.coeff(static_cast<size_t>(k)).str());
                out += join_row(row, ',');
            }
            return out;
        }
        case Format::plain: {
            std::string out;
            for (const auto& [name, poly] : polys) {
                std::vector<std::string> row;
                if (all)
                    row.push_back(name);
                for (long k = 0; k <= std::max(degree, 0L); ++k)
                    row.push_back(poly.coeff(static_cast<size_t>(k)).str());
                out += join_row(row, ' ');
            }
            return out;
        }
    }
    throw std::logic_error("render_coeffs: unreachable");
}

std::string render_table(long n, long s, long m_max, Format format) {
    auto table = value_table(n, s, m_max);
    switch (format) {
        case Format::json: {
            json rows = json::array();
            for (const auto& row : table) {
                json cells = json::array();
                for (const auto& value : row)
                    cells.push_back(value.str());
                rows.push_back(std::move(cells));
            }
            return envelope("table", json{{"n", n}, {"s", s}, {"m_max", m_max}},
                            json{{"rows", std::move(rows)}});
        }
        case Format::csv: {
            std::vector<std::string> header{"m"};
            for (long i = 0; i <= n; ++i)
                header.push_back(std::to_string(i));
            std::string out = join_row(header, ',');
            for (size_t m = 0; m < table.size(); ++m) {
                std::vector<std::string> row{std::to_string(m)};
                for (const auto& value : table[m])
                    row.push_back(value.str());
                out += join_row(row, ',');
            }
            return out;
        }
        case Format::plain: {
            std::string out;
            for (const auto& row : table) {
                std::vector<std::string> cells;
                for (const auto& value : row)
                    cells.push_back(value.str());
                out += join_row(cells, ' ');
            }
            return out;
        }
    }
    throw std::logic_error("render_table: unreachable");
}

std::string render_roots(long n, long s, long m, const Rational& width, Format format) {
    KrawtchoukParams params(n, s, m);
    if (m < 1)
        throw std::invalid_argument("roots: need m >= 1");
    auto intervals = isolate_roots(params, width);
    switch (format) {
        case Format::json: {
            json list = json::array();
            for (const auto& iv : intervals)
                list.push_back(json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}, {"exact", iv.exact}});
            return envelope(
                "roots", json{{"n", n}, {"s", s}, {"m", m}, {"width", width.str()}},
                json{{"count", intervals.size()}, {"intervals", std::move(list)}});
        }
        case Format::csv: {
            std::string out = join_row({"index", "lo", "hi", "exact"}, ',');
            for (size_t i = 0; i < intervals.size(); ++i)
                out += join_row({std::to_string(i), intervals[i].lo.str(), intervals[i].hi.str(),
                                 intervals[i].exact ? "true" : "false"},
                                ',');
            return out;
        }
        case Format::plain: {
            std::string out;
            for (const auto& iv : intervals) {
                Rational display = iv.exact ? iv.lo : Rational(1, 2) * (iv.lo + iv.hi);
                out += join_row({iv.lo.str(), iv.hi.str(), iv.exact ? "exact" : "open",
                                 display.decimal_str(kDecimalDigits)},
                                ' ');
            }
            return out;
        }
    }
    throw std::logic_error("render_roots: unreachable");
}

std::string render_gram(long n, long s, Format format) {
    auto g = gram_matrix(n, s);
    bool diagonal = true;
    for (size_t k = 0; k < g.size(); ++k)
        for (size_t l = 0; l < g.size(); ++l)
            if (k != l && !g[k][l].is_zero())
                diagonal = false;
    switch (format) {
        case Format::json: {
            json rows = json::array();
            for (const auto& row : g) {
                json cells = json::array();
                for (const auto& value : row)
                    cells.push_back(value.str());
                rows.push_back(std::move(cells));
            }
            return envelope("gram", json{{"n", n}, {"s", s}},
                            json{{"diagonal", diagonal}, {"matrix", std::move(rows)}});
        }
        case Format::csv: {
            std::vector<std::string> header{"k"};
            for (long l = 0; l <= n; ++l)
                header.push_back(std::to_string(l));
            std::string out = join_row(header, ',');
            for (size_t k = 0; k < g.size(); ++k) {
                std::vector<std::string> row{std::to_string(k)};
                for (const auto& value : g[k])
                    row.push_back(value.str());
                out += join_row(row, ',');
            }
            return out;
        }
        case Format::plain: {
            std::string out;
            for (const auto& row : g) {
                std::vector<std::string> cells;
                for (const auto& value : row)
                    cells.push_back(value.str());
                out += join_row(cells, ' ');
            }
            return out;
        }
    }
    throw std::logic_error("render_gram: unreachable");
}

std::string render_verify(const VerifyOptions& options, Format format, bool& all_passed) {
    auto reports = run_verify(options);
    size_t failed = 0;
    for (const auto& r : reports)
        if (!r.passed)
            ++failed;
    all_passed = (failed == 0);

    // report the set that actually ran: sorted, duplicates dropped
    std::vector<long> s_values = options.s_set;
    std::sort(s_values.begin(), s_values.end());
    s_values.erase(std::unique(s_values.begin(), s_values.end()), s_values.end());

    switch (format) {
        case Format::json: {
            json s_set = json::array();
            for (long s : s_values)
                s_set.push_back(s);
            json parameters{{"suite", suite_name(options.suite)},
                            {"n_max", options.n_max},
                            {"s_set", std::move(s_set)},
                            {"seed", options.seed},
                            {"width", options.width.str()},
                            {"extended", options.extended}};
            json list = json::array();
            for (const auto& r : reports) {
                json item;
                item["identity"] = r.identity;
                item["parameters"] = params_json(r.parameters);
                item["passed"] = r.passed;
                if (r.witness) {
                    item["witness"] = json{{"point", params_json(r.witness->point)},
                                           {"lhs", r.witness->lhs},
                                           {"rhs", r.witness->rhs}};
                }
                list.push_back(std::move(item));
            }
            json payload{{"total", reports.size()},
                         {"failed", failed},
                         {"all_passed", all_passed},
                         {"reports", std::move(list)}};
            return envelope("verify", std::move(parameters), std::move(payload));
        }
        case Format::csv: {
            std::string out = join_row(
                {"identity", "parameters", "passed", "witness_point", "witness_lhs", "witness_rhs"},
                ',');
            for (const auto& r : reports) {
                std::vector<std::string> row{r.identity, param_string(r.parameters),
                                             r.passed ? "true" : "false", "", "", ""};
                if (r.witness) {
                    row[3] = param_string(r.witness->point);
                    row[4] = r.witness->lhs;
                    row[5] = r.witness->rhs;
                }
                out += join_row(row, ',');
            }
            return out;
        }
        case Format::plain: {
            std::string out;
            for (const auto& r : reports) {
                std::string line = r.identity;
                if (!r.parameters.empty())
                    line += " " + param_string(r.parameters);
                line += r.passed ? " pass" : " FAIL";
                if (r.witness)
                    line += " at " + param_string(r.witness->point) + ": " + r.witness->lhs +
                            " != " + r.witness->rhs;
                out += line + "\n";
            }
            std::ostringstream summary;
            summary << (reports.size() - failed) << "/" << reports.size() << " passed\n";
            out += summary.str();
            return out;
        }
    }
    throw std::logic_error("render_verify: unreachable");
}

}  // namespace kraw
