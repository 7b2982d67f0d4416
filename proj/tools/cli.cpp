// Copyright 2026 The wfemu Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include "wfemu/circuit_io.hpp"
#include "wfemu/circuits.hpp"
#include "wfemu/costmodel.hpp"
#include "wfemu/kernel.hpp"
#include "wfemu/metrics.hpp"
#include "wfemu/psr.hpp"

namespace wfemu::cli {

namespace {

namespace fs = std::filesystem;

constexpr double kUnreliableMse = 1e-3;

std::string env_or(const char *name, std::string fallback) {
    const char *v = std::getenv(name);
    return (v && *v) ? std::string(v) : fallback;
}

struct SessionFlags {
    std::string format;
    std::string rounding = "rne";
    bool no_cap = false;
    double watts = PowerProfile{}.watts;

    void add_to(CLI::App &app, bool with_format = true) {
        if (with_format)
            app.add_option("-f,--format", format,
                           "Number format: fp16, fp32, fx16, fx24, fx32, ref (env WFEMU_FORMAT)");
        app.add_option("--rounding", rounding, "Rounding: rne or trunc")
            ->check(CLI::IsMember({"rne", "trunc"}));
        app.add_flag("--no-cap", no_cap, "Lift the 17/18-qubit memory cap");
        app.add_option("--power", watts, "Accelerator power in watts")
            ->check(CLI::PositiveNumber);
    }

    Rounding rounding_mode() const {
        return rounding == "trunc" ? Rounding::Truncate : Rounding::NearestEven;
    }
    NumberFormat resolve(const std::string &text) const {
        return parse_format(text).with_rounding(rounding_mode());
    }
    NumberFormat session_format() const {
        return resolve(format.empty() ? env_or(kEnvFormat, "fx32") : format);
    }
    InitOptions init() const { return {!no_cap}; }
};

std::vector<std::uint8_t> read_bytes(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::ofstream open_out(const fs::path &p) {
    if (p.has_parent_path())
        fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + p.string() + "'");
    return out;
}

std::string fmt_double(const char *spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// ---------------------------------------------------------------- run

struct RunArgs {
    std::string file;
    std::string out_dir;
    std::string label;
    SessionFlags flags;
};

int cmd_run(const RunArgs &a, std::ostream &out, std::ostream &err) {
    const NumberFormat fmt = a.flags.session_format();
    const auto bytes = read_bytes(a.file);
    std::optional<Program> program;
    std::optional<Program> reference;
    if (looks_like_program_image(bytes)) {
        program.emplace(decode_program(bytes, fmt));
        reference.emplace(decode_program(bytes, NumberFormat::reference()));
    } else {
        const Circuit c = parse_circuit(std::string(bytes.begin(), bytes.end()));
        program.emplace(lower(c, fmt));
        reference.emplace(lower(c, NumberFormat::reference()));
    }

    const StateVector computed = run(*program, a.flags.init());
    const StateVector oracle = run(*reference, InitOptions{false});
    const std::string label = a.label.empty() ? fs::path(a.file).stem().string() : a.label;
    const AccuracyReport acc = evaluate(label, computed, oracle);

    const fs::path dir = a.out_dir.empty() ? fs::path(env_or(kEnvOutDir, ".")) : fs::path(a.out_dir);
    {
        auto f = open_out(dir / "amplitudes.csv");
        write_amplitudes_csv(f, computed);
    }
    {
        auto f = open_out(dir / "accuracy.csv");
        write_accuracy_header(f);
        write_accuracy_row(f, acc);
    }
    out << "task " << label << " format " << fmt.name() << " qubits " << program->qubits()
        << " gates " << program->size() << '\n';
    out << "fidelity " << fmt_double("%.17g", acc.fidelity) << '\n';
    out << "mse " << fmt_double("%.17g", acc.mse) << '\n';
    if (!fmt.is_reference()) {
        const CostReport cost = predict(*program, builtin_profile(fmt), {a.flags.watts});
        auto f = open_out(dir / "cost.csv");
        write_cost_header(f);
        write_cost_row(f, label, fmt, cost);
        out << "time_s " << fmt_double("%.6e", cost.time_s) << '\n';
        out << "ngs " << fmt_double("%.6e", cost.ngs) << '\n';
        out << "pdp_j " << fmt_double("%.6e", cost.pdp_joules) << '\n';
    }
    if (acc.mse > kUnreliableMse)
        err << "WARNING: MSE " << fmt_double("%.3e", acc.mse) << " exceeds "
            << fmt_double("%.0e", kUnreliableMse) << "; " << fmt.name()
            << " output is unreliable\n";
    return kOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::string task;
    std::string range = "3..17";
    std::string formats = "fx24,fp32,fx32";
    int depth = 10;
    std::uint64_t seed = 7;
    int samples = 1;
    unsigned jobs = 0;
    std::string out;
    std::string markdown;
    SessionFlags flags;
};

struct BenchRow {
    int n = 0;
    NumberFormat format;
    std::size_t gates = 0;
    double cycles = 0.0;
    double fidelity = 0.0;
    double mse = 0.0;
    double time_s = 0.0;
    double ngs = 0.0;
    double pdp = 0.0;
};

Circuit bench_circuit(Task task, int n, int depth, std::uint64_t seed) {
    switch (task) {
    case Task::QFT: return build_qft(n);
    case Task::RQC: return build_rqc(n, depth, seed);
    case Task::ZXZ: return build_zxz(n, random_angles(3 * static_cast<std::size_t>(n), seed));
    }
    throw std::invalid_argument("unknown task");
}

std::vector<NumberFormat> parse_format_list(const std::string &list, const SessionFlags &flags) {
    std::vector<NumberFormat> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(flags.resolve(item));
    if (out.empty())
        throw std::invalid_argument("no formats given");
    return out;
}

// One cell: every format for one (n, sample), against one oracle run.
std::vector<BenchRow> bench_cell(Task task, int n, std::uint64_t seed, const BenchArgs &a,
                                 const std::vector<NumberFormat> &formats) {
    const Circuit c = bench_circuit(task, n, a.depth, seed);
    const StateVector oracle = run(c, NumberFormat::reference(), InitOptions{false});
    std::vector<BenchRow> rows;
    for (const NumberFormat &fmt : formats) {
        const Program p = lower(c, fmt);
        const StateVector s = run(p, a.flags.init());
        BenchRow r{n, fmt, p.size()};
        r.fidelity = fidelity(s, oracle);
        r.mse = mse(s, oracle);
        if (!fmt.is_reference()) {
            const CostReport cost = predict(p, builtin_profile(fmt), {a.flags.watts});
            r.cycles = static_cast<double>(cost.total_cycles);
            r.time_s = cost.time_s;
            r.ngs = cost.ngs;
            r.pdp = cost.pdp_joules;
        }
        rows.push_back(r);
    }
    return rows;
}

int cmd_bench(const BenchArgs &a, std::ostream &out, std::ostream &) {
    Task task;
    if (a.task == "qft")
        task = Task::QFT;
    else if (a.task == "rqc")
        task = Task::RQC;
    else
        task = Task::ZXZ;
    const std::vector<int> ns = parse_range(a.range);
    const std::vector<NumberFormat> formats = parse_format_list(a.formats, a.flags);
    for (int n : ns)
        for (const NumberFormat &f : formats)
            if (a.flags.init().enforce_qubit_cap && n > qubit_cap(f))
                throw CapacityError("qubit cap exceeded: " + std::to_string(n) + " > " +
                                    std::to_string(qubit_cap(f)) + " for " + f.name());

    const auto samples = static_cast<std::size_t>(a.samples);
    const std::size_t cells = ns.size() * samples;
    std::vector<std::vector<BenchRow>> results(cells);
    std::vector<std::exception_ptr> errors(cells);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells;) {
            try {
                results[i] = bench_cell(task, ns[i / samples], a.seed + i % samples, a, formats);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned jobs =
        std::max(1u, std::min<unsigned>(a.jobs ? a.jobs : std::thread::hardware_concurrency(),
                                         static_cast<unsigned>(cells)));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back(worker);
    for (auto &t : pool)
        t.join();
    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);

    // Average samples per (n, format); merged in n then format order.
    std::vector<BenchRow> rows;
    for (std::size_t ni = 0; ni < ns.size(); ++ni) {
        for (std::size_t fi = 0; fi < formats.size(); ++fi) {
            BenchRow acc = results[ni * samples][fi];
            for (std::size_t s = 1; s < samples; ++s) {
                const BenchRow &r = results[ni * samples + s][fi];
                acc.cycles += r.cycles;
                acc.fidelity += r.fidelity;
                acc.mse += r.mse;
                acc.time_s += r.time_s;
                acc.ngs += r.ngs;
                acc.pdp += r.pdp;
            }
            const auto k = static_cast<double>(samples);
            acc.cycles /= k;
            acc.fidelity /= k;
            acc.mse /= k;
            acc.time_s /= k;
            acc.ngs /= k;
            acc.pdp /= k;
            rows.push_back(acc);
        }
    }

    std::ostringstream csv;
    csv << "task,n,format,gates,cycles,fidelity,mse,time_s,ngs,pdp_j\n";
    char buf[256];
    for (const BenchRow &r : rows) {
        if (r.format.is_reference())
            std::snprintf(buf, sizeof buf, "%s,%d,%s,%zu,NA,%.17g,%.17g,NA,NA,NA\n",
                          a.task.c_str(), r.n, r.format.name().c_str(), r.gates, r.fidelity,
                          r.mse);
        else
            std::snprintf(buf, sizeof buf, "%s,%d,%s,%zu,%.0f,%.17g,%.17g,%.6e,%.6e,%.6e\n",
                          a.task.c_str(), r.n, r.format.name().c_str(), r.gates, r.cycles,
                          r.fidelity, r.mse, r.time_s, r.ngs, r.pdp);
        csv << buf;
    }
    if (a.out.empty()) {
        out << csv.str();
    } else {
        auto f = open_out(a.out);
        f << csv.str();
    }

    if (!a.markdown.empty()) {
        auto f = open_out(a.markdown);
        f << "| task | n | format | gates | fidelity | MSE | time (s) | NGS | PDP (J) |\n"
          << "|---|---|---|---|---|---|---|---|---|\n";
        for (const BenchRow &r : rows) {
            std::snprintf(buf, sizeof buf,
                          "| %s | %d | %s | %zu | %.9f | %.3e | %.3e | %.3e | %.3e |\n",
                          a.task.c_str(), r.n, r.format.name().c_str(), r.gates, r.fidelity,
                          r.mse, r.time_s, r.ngs, r.pdp);
            f << buf;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------- rqc / qft

void emit_circuit(const Circuit &c, const std::string &path, std::ostream &out) {
    if (path.empty())
        out << print_circuit(c);
    else
        write_circuit_file(path, c);
}

// ---------------------------------------------------------------- psr

struct PsrArgs {
    int n = 2;
    int iters = 100;
    double gamma = 0.1;
    std::uint64_t seed = 1;
    std::string constant = "half";
    std::string out;
    SessionFlags flags;
};

int cmd_psr(const PsrArgs &a, std::ostream &out, std::ostream &err) {
    const NumberFormat fmt = a.flags.session_format();
    OptimizeOptions opts;
    opts.gamma = a.gamma;
    opts.iterations = a.iters;
    opts.kappa = shift_value(a.constant == "inv-sqrt2" ? ShiftConstant::InvSqrt2 : ShiftConstant::Half);
    opts.init = a.flags.init();
    const Optimizer opt =
        optimize(a.n, random_angles(3 * static_cast<std::size_t>(a.n), a.seed), fmt, opts);
    if (a.out.empty()) {
        write_trace_csv(out, opt);
    } else {
        auto f = open_out(a.out);
        write_trace_csv(f, opt);
    }
    err << "format " << fmt.name() << " shift-constant " << fmt_double("%.17g", opts.kappa)
        << '\n';
    err << "sessions " << opt.sessions << '\n';
    if (!opt.history.empty())
        err << "final-cost " << fmt_double("%.17g", opt.history.back().cost) << '\n';
    return kOk;
}

// ---------------------------------------------------------------- compile

int cmd_compile(const std::string &file, const std::string &path, const SessionFlags &flags,
                const std::string &format) {
    const NumberFormat fmt = flags.resolve(format);
    const Program p = lower(read_circuit_file(file), fmt);
    const auto image = encode_program(p);
    auto f = open_out(path);
    f.write(reinterpret_cast<const char *>(image.data()), static_cast<std::streamsize>(image.size()));
    return kOk;
}

} // namespace

std::vector<int> parse_range(const std::string &text) {
    std::vector<int> out;
    const auto dots = text.find("..");
    try {
        if (dots != std::string::npos) {
            const int lo = std::stoi(text.substr(0, dots));
            const int hi = std::stoi(text.substr(dots + 2));
            if (lo > hi)
                throw std::invalid_argument("empty range");
            for (int n = lo; n <= hi; ++n)
                out.push_back(n);
        } else {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ','))
                out.push_back(std::stoi(item));
        }
    } catch (const std::logic_error &) {
        throw std::invalid_argument("invalid qubit range '" + text + "'");
    }
    if (out.empty() || out.front() < 1)
        throw std::invalid_argument("invalid qubit range '" + text + "'");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int run_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Wave-function quantum accelerator emulator"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto *run_cmd = app.add_subcommand("run", "Run a circuit file and compare with binary64");
    run_cmd->add_option("file", run_args.file, "Circuit file or compiled program image")
        ->required();
    run_cmd->add_option("-o,--out-dir", run_args.out_dir, "Output directory (env WFEMU_OUT_DIR)");
    run_cmd->add_option("--task", run_args.label, "Task label for reports (default: file stem)");
    run_args.flags.add_to(*run_cmd);

    BenchArgs bench;
    auto *bench_cmd = app.add_subcommand("bench", "Sweep a benchmark task over qubits and formats");
    bench_cmd->add_option("task", bench.task, "qft, rqc or psr")
        ->required()
        ->check(CLI::IsMember({"qft", "rqc", "psr"}));
    bench_cmd->add_option("--n", bench.range, "Qubit counts: 3..17, 5, or 3,5,8");
    bench_cmd->add_option("--formats", bench.formats, "Comma-separated formats");
    bench_cmd->add_option("--depth", bench.depth, "RQC depth")->check(CLI::Range(1, 2048));
    bench_cmd->add_option("--seed", bench.seed, "Base seed for RQC circuits and PSR angles");
    bench_cmd->add_option("--samples", bench.samples, "Circuits per cell (seed, seed+1, ...)")
        ->check(CLI::Range(1, 1000));
    bench_cmd->add_option("-j,--jobs", bench.jobs, "Worker threads (default: all cores)");
    bench_cmd->add_option("-o,--out", bench.out, "CSV output file (default: stdout)");
    bench_cmd->add_option("--markdown", bench.markdown, "Also write a markdown table here");
    bench.flags.add_to(*bench_cmd, false);

    int rqc_n = 5, rqc_depth = 10;
    std::uint64_t rqc_seed = 0;
    std::string rqc_out;
    auto *rqc_cmd = app.add_subcommand("rqc", "Generate a random circuit file");
    rqc_cmd->add_option("--n", rqc_n, "Qubits")->required()->check(CLI::Range(1, 31));
    rqc_cmd->add_option("--depth", rqc_depth, "Depth (gates = n * depth)")
        ->check(CLI::Range(1, 2048));
    rqc_cmd->add_option("--seed", rqc_seed, "Generator seed");
    rqc_cmd->add_option("-o,--out", rqc_out, "Output file (default: stdout)");

    int qft_n = 3;
    std::string qft_out;
    auto *qft_cmd = app.add_subcommand("qft", "Generate a QFT circuit file");
    qft_cmd->add_option("--n", qft_n, "Qubits")->required()->check(CLI::Range(1, 31));
    qft_cmd->add_option("-o,--out", qft_out, "Output file (default: stdout)");

    PsrArgs psr;
    auto *psr_cmd = app.add_subcommand("psr", "Gradient descent on the ZXZ ansatz");
    psr_cmd->add_option("--n", psr.n, "Qubits")->check(CLI::Range(1, 31));
    psr_cmd->add_option("--iters", psr.iters, "Iterations")->check(CLI::NonNegativeNumber);
    psr_cmd->add_option("--gamma", psr.gamma, "Learning rate")->check(CLI::NonNegativeNumber);
    psr_cmd->add_option("--seed", psr.seed, "Seed for the initial angles");
    psr_cmd->add_option("--psr-constant", psr.constant, "half (1/2) or inv-sqrt2 (1/sqrt 2)")
        ->check(CLI::IsMember({"half", "inv-sqrt2"}));
    psr_cmd->add_option("-o,--out", psr.out, "Trace CSV (default: stdout)");
    psr.flags.add_to(*psr_cmd);

    std::string compile_file, compile_out, compile_format = "ref";
    SessionFlags compile_flags;
    auto *compile_cmd = app.add_subcommand("compile", "Write a binary program image");
    compile_cmd->add_option("file", compile_file, "Circuit file")->required();
    compile_cmd->add_option("-o,--out", compile_out, "Output image")->required();
    compile_cmd->add_option("-f,--format", compile_format, "Quantization format (default ref)");
    compile_cmd->add_option("--rounding", compile_flags.rounding, "Rounding: rne or trunc")
        ->check(CLI::IsMember({"rne", "trunc"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*run_cmd)
            return cmd_run(run_args, out, err);
        if (*bench_cmd)
            return cmd_bench(bench, out, err);
        if (*rqc_cmd) {
            emit_circuit(build_rqc(rqc_n, rqc_depth, rqc_seed), rqc_out, out);
            return kOk;
        }
        if (*qft_cmd) {
            emit_circuit(build_qft(qft_n), qft_out, out);
            return kOk;
        }
        if (*psr_cmd)
            return cmd_psr(psr, out, err);
        if (*compile_cmd)
            return cmd_compile(compile_file, compile_out, compile_flags, compile_format);
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const CapacityError &e) {
        err << "capacity error: " << e.what() << '\n';
        return kCapacity;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace wfemu::cli
