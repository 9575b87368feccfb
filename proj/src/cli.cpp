#include "charvar/cli.hpp"

#include "charvar/acceptance.hpp"
#include "charvar/epoly.hpp"
#include "charvar/errors.hpp"
#include "charvar/fforacle.hpp"
#include "charvar/format.hpp"
#include "charvar/partition_expr.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <sstream>
#include <thread>

namespace charvar::cli {

namespace {

struct Selector {
    std::string group = "gl";
    unsigned n = 1;
    unsigned r = 1;
    std::string stratum;
    std::string format = "human";
};

void add_selector(CLI::App* cmd, Selector& s) {
    cmd->add_option("--group", s.group, "gl, sl or pgl")->required();
    cmd->add_option("--n", s.n, "matrix size")->required();
    cmd->add_option("--r", s.r, "rank of the free group")->required();
    cmd->add_option("--stratum", s.stratum, "partition of n, e.g. \"1^2 2\"");
    cmd->add_option("--format", s.format, "human, json, csv or latex");
}

StratumQuery to_query(const Selector& s) {
    StratumQuery q;
    q.group = parse_group(s.group);
    q.n = s.n;
    q.r = s.r;
    if (!s.stratum.empty()) q.stratum = parse_partition(s.stratum, s.n);
    q.validate();
    return q;
}

// Evaluates every query on a pool of workers; results keep the input order.
std::vector<EpolyRecord> compute_all(const std::vector<StratumQuery>& queries, unsigned threads) {
    std::vector<EpolyRecord> out(queries.size());
    std::vector<std::exception_ptr> errors(queries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < queries.size();) {
            try {
                out[i] = compute_record(queries[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), queries.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

int run_verify(unsigned n, unsigned r, const std::vector<unsigned>& qs, const std::string& format,
               std::ostream& out, std::ostream& err) {
    const OutputFormat f = parse_format(format);
    const auto report = ff::verify(n, r, qs, thread_count());
    if (f == OutputFormat::Json) {
        out << "{\"n\":" << n << ",\"r\":" << r << ",\"status\":\"" << ff::to_string(report.status)
            << "\",\"rows\":[";
        for (std::size_t i = 0; i < report.rows.size(); ++i) {
            const auto& row = report.rows[i];
            out << (i ? "," : "") << "{\"q\":" << row.q << ",\"raw\":" << row.raw << ",\"classes\":" << row.classes
                << ",\"symbolic\":" << row.symbolic.get_str() << ",\"match\":" << (row.match ? "true" : "false")
                << "}";
        }
        out << "]}\n";
    } else if (f == OutputFormat::Csv) {
        out << "n,r,q,raw,classes,symbolic,match\n";
        for (const auto& row : report.rows) {
            out << n << "," << r << "," << row.q << "," << row.raw << "," << row.classes << ","
                << row.symbolic.get_str() << "," << (row.match ? "true" : "false") << "\n";
        }
    } else {
        for (const auto& row : report.rows) {
            out << "n=" << n << " r=" << r << " q=" << row.q << ": raw " << row.raw << ", classes " << row.classes
                << ", B(q) " << row.symbolic.get_str() << (row.match ? ", match" : ", MISMATCH") << "\n";
        }
        out << "status: " << ff::to_string(report.status) << "\n";
    }
    if (report.status == ff::OracleStatus::Warning) {
        err << "warning: oracle mismatch at characteristic " << report.mismatched_primes.front() << "\n";
    }
    if (report.status == ff::OracleStatus::Fail) {
        err << "OracleMismatch: counts disagree at " << report.mismatched_primes.size() << " characteristics\n";
        return 1;
    }
    return 0;
}

}  // namespace

unsigned thread_count() {
    const char* env = std::getenv(kThreadsEnv);
    if (!env || !*env) return std::max(1u, std::thread::hardware_concurrency());
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) {
        throw InvalidArgument(std::string(kThreadsEnv) + " must be an integer in 1..1024, got '" + env + "'");
    }
    return static_cast<unsigned>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("charvar");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"E-polynomials and Euler characteristics of free-group character varieties", "charvar"};
    app.require_subcommand(1);

    Selector epoly_sel, euler_sel;
    auto* epoly = app.add_subcommand("epoly", "E-polynomial of a character variety or stratum");
    add_selector(epoly, epoly_sel);
    auto* euler = app.add_subcommand("euler", "Euler characteristic of a character variety or stratum");
    add_selector(euler, euler_sel);

    std::string table_group = "gl", table_format = "human";
    unsigned n_max = 1, r_max = 1;
    bool per_stratum = false;
    auto* table = app.add_subcommand("table", "E-polynomials for all n <= n-max, r <= r-max");
    table->add_option("--group", table_group, "gl, sl or pgl")->required();
    table->add_option("--n-max", n_max)->required();
    table->add_option("--r-max", r_max)->required();
    table->add_flag("--per-stratum", per_stratum, "one row per stratum instead of per variety");
    table->add_option("--format", table_format, "human, json, csv or latex");

    unsigned vn = 1, vr = 1;
    std::vector<unsigned> vq;
    std::string verify_format = "human";
    auto* verify = app.add_subcommand("verify", "Compare B_n^r(q) with brute-force counts over F_q");
    verify->add_option("--n", vn)->required();
    verify->add_option("--r", vr)->required();
    verify->add_option("--q", vq, "field size, repeatable")->required();
    verify->add_option("--format", verify_format, "human, json or csv");

    std::vector<int> only;
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest->add_option("--only", only, "criterion id, repeatable")->check(CLI::Range(1, kCriterionCount));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "UsageError: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*epoly || *euler) {
            const Selector& s = *epoly ? epoly_sel : euler_sel;
            const OutputFormat f = parse_format(s.format);
            const std::vector<EpolyRecord> recs{compute_record(to_query(s))};
            out << (*epoly ? render(recs, f) : render_euler(recs, f));
            return 0;
        }
        if (*table) {
            const OutputFormat f = parse_format(table_format);
            const GroupKind g = parse_group(table_group);
            if (n_max == 0 || r_max == 0) throw InvalidArgument("--n-max and --r-max must be >= 1");
            std::vector<StratumQuery> queries;
            for (unsigned n = 1; n <= n_max; ++n) {
                for (unsigned r = 1; r <= r_max; ++r) {
                    StratumQuery q;
                    q.group = g;
                    q.n = n;
                    q.r = r;
                    if (!per_stratum) {
                        queries.push_back(q);
                        continue;
                    }
                    for (const auto& m : enumerate_partitions(n)) {
                        q.stratum = m;
                        queries.push_back(q);
                    }
                }
            }
            out << render(compute_all(queries, thread_count()), f);
            return 0;
        }
        if (*verify) return run_verify(vn, vr, vq, verify_format, out, err);
        if (*selftest) {
            if (only.empty()) {
                for (int id = 1; id <= kCriterionCount; ++id) only.push_back(id);
            }
            bool all = true;
            for (int id : only) {
                const auto res = run_criterion(id, thread_count());
                out << format_line(res) << "\n" << std::flush;
                all = all && res.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace charvar::cli
