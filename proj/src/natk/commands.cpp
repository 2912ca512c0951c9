#include "natk/commands.hpp"

#include <chrono>
#include <fstream>

#include "natk/catalog.hpp"
#include "natk/suites.hpp"

namespace natk {

namespace {

using Clock = std::chrono::steady_clock;

Json set_json(const ElementSet& s, std::size_t cap = 256) {
    Json arr = Json::array();
    std::size_t n = 0;
    for (Idx i : s.indices()) {
        if (n++ >= cap) break;
        arr.push_back(static_cast<int>(i));
    }
    return arr;
}

std::vector<Witness> error_witnesses(const Error& e) {
    std::vector<Witness> ws = e.witnesses;
    if (ws.empty()) ws.push_back(Witness{e.kind, {}});
    return ws;
}

struct Args {
    std::vector<std::string> positional;
    RunOptions options;
};

Args parse_args(const std::vector<std::string>& argv) {
    Args a;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        auto next = [&](const char* flag) -> std::string {
            if (i + 1 >= argv.size())
                fail(ErrorClass::Usage, "MissingValue", std::string(flag) + " needs a value");
            return argv[++i];
        };
        if (s == "--json")
            a.options.json = true;
        else if (s == "--no-json")
            a.options.json = false;
        else if (s == "--seed")
            a.options.seed = std::stoull(next("--seed"));
        else if (s == "--threads")
            a.options.threads = std::max(1, std::stoi(next("--threads")));
        else if (s == "--max")
            a.options.max = std::stoull(next("--max"));
        else if (s == "--dedup-auto")
            a.options.dedup = true;
        else if (s == "--bound")
            a.options.bound = std::stoull(next("--bound"));
        else if (s == "-o" || s == "--out")
            a.options.out = next("-o");
        else if (s == "--name")
            a.options.name = next("--name");
        else if (!s.empty() && s[0] == '-' && !(s.size() > 1 && std::isdigit(s[1])))
            fail(ErrorClass::Usage, "UnknownFlag", "unknown flag " + s);
        else
            a.positional.push_back(s);
    }
    return a;
}

const std::string& arg(const Args& a, std::size_t i, const char* what) {
    if (i >= a.positional.size())
        fail(ErrorClass::Usage, "MissingArgument", std::string("missing argument: ") + what);
    return a.positional[i];
}

/// Wraps a target-validation step: validation failures become the negative
/// verdict of the check rather than usage errors.
template <class Fn>
void run_check(Report& rep, Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        if (e.cls != ErrorClass::Validation) throw;
        rep.ok = false;
        rep.witnesses = error_witnesses(e);
        rep.details["error"] = e.what();
        rep.details["kind"] = e.kind;
    }
}

void cmd_check(const Args& a, Session& session, Report& rep,
               std::optional<std::string>& document) {
    (void)document;
    const std::string& what = arg(a, 1, "check target kind");
    rep.command = "check " + what;

    if (what == "monoid") {
        run_check(rep, [&] {
            MonoidPtr m = session.monoid(arg(a, 2, "reference"));
            rep.details["order"] = m->order;
            rep.details["one"] = m->one;
            rep.details["zero"] = m->zero ? Json(*m->zero) : Json(nullptr);
            rep.details["minus_one"] = m->minus_one ? Json(*m->minus_one) : Json(nullptr);
        });
        return;
    }
    if (what == "group") {
        run_check(rep, [&] {
            GroupPtr g = session.group(arg(a, 2, "reference"));
            rep.details["order"] = g->order;
            rep.details["zero"] = g->zero;
        });
        return;
    }
    if (what == "nearring") {
        run_check(rep, [&] {
            NearRingPtr n = session.nearring(arg(a, 2, "reference"));
            NearRingReport c = classify(*n, a.options.threads);
            rep.details["order"] = n->order();
            rep.details["is_nearfield"] = c.is_nearfield;
            rep.details["is_ring"] = c.is_ring;
            rep.details["fa"] = c.fa;
            rep.details["sa"] = c.sa;
            rep.details["s1_for_minus_one"] = c.s1_for_minus_one;
        });
        return;
    }
    if (what == "module") {
        run_check(rep, [&] {
            ModulePtr v = session.module_of(arg(a, 2, "reference"));
            rep.details["order"] = v->order();
            rep.details["monoid_order"] = v->monoid->order;
        });
        return;
    }
    if (what == "scalar-group") {
        run_check(rep, [&] {
            MonoidPtr m = session.monoid_of(arg(a, 2, "reference"));
            ScalarGroupReport s = check_scalar_group(*m);
            rep.ok = s.is_scalar_group;
            if (s.failure) rep.witnesses.push_back(*s.failure);
            rep.details["zero"] = s.zero ? Json(*s.zero) : Json(nullptr);
            rep.details["minus_one"] = s.minus_one ? Json(*s.minus_one) : Json(nullptr);
            Json sols = Json::array();
            for (Idx e : s.eta_solutions) sols.push_back(static_cast<int>(e));
            rep.details["eta_solutions"] = sols;
        });
        return;
    }
    if (what == "nvs") {
        run_check(rep, [&] {
            ModulePtr v = session.module_of(arg(a, 2, "reference"));
            NvsReport s = check_nvs(*v, a.options.threads);
            rep.ok = s.is_nvs;
            if (!s.is_nvs) {
                Witness w{s.failure, {}};
                if (s.failure == "monoid-not-scalar-group" && s.scalar.failure)
                    w = *s.scalar.failure;
                else if (s.failure == "fa" && s.action.fa_witness)
                    w.elements = {static_cast<int>((*s.action.fa_witness)[0]),
                                  static_cast<int>((*s.action.fa_witness)[1]),
                                  static_cast<int>((*s.action.fa_witness)[2])};
                else if (s.failure == "sa" && s.action.sa_witness)
                    w.elements = {static_cast<int>(*s.action.sa_witness)};
                rep.witnesses.push_back(std::move(w));
                rep.details["failure"] = s.failure;
            }
            rep.details["scalar_group"] = s.scalar.is_scalar_group;
            rep.details["fa"] = s.action.fa;
            rep.details["sa"] = s.action.sa == ActionPropertyReport::Status::Holds
                                    ? "holds"
                                    : (s.action.sa == ActionPropertyReport::Status::Fails
                                           ? "fails"
                                           : "not-applicable");
            rep.details["quasi_kernel_generates"] = s.qv_generates;
        });
        return;
    }
    if (what == "andre") {
        run_check(rep, [&] {
            ModulePtr v = session.module_of(arg(a, 2, "module reference"));
            MnrPtr rr = session.multinearring(arg(a, 3, "multi-near-ring reference"));
            AndreReport s = check_andre(*v, *rr);
            rep.ok = s.is_andre;
            if (s.qk2_failure)
                rep.witnesses.push_back(
                    Witness{"not-recovered", {static_cast<int>(*s.qk2_failure)}});
            rep.details["qstar_size"] = s.qstar.count();
            if (v->order() <= 256) rep.details["qstar"] = set_json(s.qstar);
        });
        return;
    }
    if (what == "fa-sa") {
        run_check(rep, [&] {
            ModulePtr v = session.module_of(arg(a, 2, "reference"));
            ActionPropertyReport s = check_action_properties(*v, a.options.threads);
            rep.ok = s.fa && s.sa != ActionPropertyReport::Status::Fails;
            rep.details["fa"] = s.fa;
            if (s.fa_witness)
                rep.witnesses.push_back(Witness{"fa", {static_cast<int>((*s.fa_witness)[0]),
                                                       static_cast<int>((*s.fa_witness)[1]),
                                                       static_cast<int>((*s.fa_witness)[2])}});
            rep.details["sa"] = s.sa == ActionPropertyReport::Status::Holds
                                    ? "holds"
                                    : (s.sa == ActionPropertyReport::Status::Fails
                                           ? "fails"
                                           : "not-applicable");
            if (s.sa_witness)
                rep.witnesses.push_back(Witness{"sa", {static_cast<int>(*s.sa_witness)}});
        });
        return;
    }
    fail(ErrorClass::Usage, "UnknownCommand", "unknown check target: " + what);
}

std::string current_dir_ref(const std::string& name) { return name; }

void cmd_quasikernel(const Args& a, Session& session, Report& rep) {
    rep.command = "quasikernel";
    ModulePtr v = session.module_of(arg(a, 1, "module reference"));
    QuasiKernelReport q = quasi_kernel(*v);
    rep.details["order"] = v->order();
    rep.details["size"] = q.qv.count();
    if (v->order() <= 512) rep.details["elements"] = set_json(q.qv, 512);
}

void cmd_enumerate(const Args& a, Session& session, Report& rep,
                   std::optional<std::string>& document) {
    if (arg(a, 1, "enumerate target") != "nearrings")
        fail(ErrorClass::Usage, "UnknownCommand", "only 'enumerate nearrings' is supported");
    rep.command = "enumerate nearrings";
    MonoidPtr m = session.monoid_of(arg(a, 2, "monoid reference"));

    EnumerationTask task;
    task.monoid = m;
    task.max_results = a.options.max;
    task.dedup_by_automorphism = a.options.dedup;
    EnumerationResult res = enumerate_nearrings(task);

    rep.details["count"] = res.additions.size();
    rep.details["complete"] = res.complete;
    if (res.orbits) {
        Json orbits = Json::array();
        for (const auto& o : *res.orbits) {
            Json idx = Json::array();
            for (auto i : o) idx.push_back(i);
            orbits.push_back(idx);
        }
        rep.details["orbits"] = orbits;
    }

    NatDocument doc;
    doc.blocks.push_back(block_of_monoid("M", *m));
    for (std::size_t i = 0; i < res.additions.size(); ++i) {
        NearRingPtr n = validate_nearring(m, res.additions[i]);
        doc.blocks.push_back(
            block_of_nearring("N" + std::to_string(i), current_dir_ref("M"), *n));
    }
    document = emit_nat(doc);
}

void cmd_product(const Args& a, Session& session, Report& rep,
                 std::optional<std::string>& document) {
    rep.command = "product";
    if (a.positional.size() < 2)
        fail(ErrorClass::Usage, "MissingArgument", "product needs at least one module");
    std::vector<ModulePtr> factors;
    for (std::size_t i = 1; i < a.positional.size(); ++i)
        factors.push_back(session.module_of(a.positional[i]));
    ModulePtr p = product(factors[0]->monoid, factors);
    rep.details["factors"] = factors.size();
    rep.details["order"] = p->order();

    NatDocument doc;
    doc.blocks.push_back(block_of_monoid("M", *p->monoid));
    doc.blocks.push_back(
        block_of_module(a.options.name.value_or("P"), current_dir_ref("M"), *p));
    document = emit_nat(doc);
}

void cmd_quotient(const Args& a, Session& session, Report& rep,
                  std::optional<std::string>& document) {
    rep.command = "quotient";
    ModulePtr v = session.module_of(arg(a, 1, "module reference"));
    ElementSet gens(v->order());
    for (std::size_t i = 2; i < a.positional.size(); ++i) {
        std::size_t x = std::stoul(a.positional[i]);
        if (x >= v->order())
            fail(ErrorClass::Usage, "BadElement", "generator index out of range");
        gens.set(x);
    }
    Submodule w = generated_submodule(*v, gens);
    QuotientResult q = quotient(v, w);
    rep.details["submodule_size"] = w.carrier.count();
    rep.details["quotient_order"] = q.module_->order();
    rep.details["submodule"] = set_json(w.carrier);

    NatDocument doc;
    doc.blocks.push_back(block_of_monoid("M", *v->monoid));
    doc.blocks.push_back(block_of_module("V", "M", *v));
    doc.blocks.push_back(block_of_module("Q", "M", *q.module_));
    doc.blocks.push_back(block_of_morphism("pi", "V", "Q", q.projection));
    document = emit_nat(doc);
}

void cmd_submodules(const Args& a, Session& session, Report& rep) {
    rep.command = "submodules";
    ModulePtr v = session.module_of(arg(a, 1, "module reference"));
    auto subs = enumerate_submodules(*v, a.options.bound);
    rep.details["count"] = subs.size();
    Json arr = Json::array();
    for (const auto& w : subs) arr.push_back(set_json(w.carrier, v->order()));
    rep.details["submodules"] = arr;
}

void cmd_factorize(const Args& a, Session& session, Report& rep) {
    rep.command = "factorize";
    MorphismPtr f = session.morphism(arg(a, 1, "morphism reference"));
    Factorization fac = factorize(*f);
    rep.details["dom_order"] = f->dom->order();
    rep.details["kernel_size"] = fac.kernel.carrier.count();
    rep.details["image_size"] = fac.image.carrier.count();
    rep.details["cokernel_order"] = fac.cokernel->order();
    rep.details["kernel"] = set_json(fac.kernel.carrier);
    rep.details["image"] = set_json(fac.image.carrier);
}

void cmd_decompose(const Args& a, Session& session, Report& rep) {
    rep.command = "decompose";
    ModulePtr v = session.module_of(arg(a, 1, "module reference"));
    std::size_t elem = std::stoul(arg(a, 2, "element index"));
    MnrPtr rr;
    if (a.positional.size() > 3) {
        rr = session.multinearring(a.positional[3]);
    } else {
        rr = std::make_shared<const MultiNearRing>(enumerate_multi_nearring(v->monoid));
    }
    try {
        DecompositionCertificate cert =
            decompose_quasikernel(*v, *rr, static_cast<Idx>(elem));
        rep.details["element"] = elem;
        rep.details["m_v"] = cert.m_v;
        Json parts = Json::array();
        for (Idx p : cert.parts) parts.push_back(static_cast<int>(p));
        rep.details["parts"] = parts;
        Json trail = Json::array();
        for (const auto& s : cert.trail) {
            Json step = Json::object();
            step["target"] = s.target;
            step["q1"] = s.q1;
            step["q2"] = s.q2;
            step["alpha"] = s.alpha;
            step["beta"] = s.beta;
            step["beta_prime"] = s.beta_prime;
            trail.push_back(step);
        }
        rep.details["trail"] = trail;
    } catch (const Error& e) {
        if (e.kind != "HypothesisFailed") throw;
        rep.ok = false;
        rep.witnesses = error_witnesses(e);
        rep.details["error"] = e.what();
    }
}

void cmd_tfae(const Args& a, Session& session, Report& rep) {
    rep.command = "tfae";
    ModulePtr v = session.module_of(arg(a, 1, "module reference"));
    try {
        TfaeReport t = check_tfae(v);
        rep.details["submodules_generated"] = t.submodules_generated;
        rep.details["qk2_all"] = t.qk2_all;
        rep.details["qk2prime_all"] = t.qk2prime_all;
        rep.details["thmaa_equality"] = t.thmaa_equality;
        rep.details["qw_identity"] = t.qw_identity;
    } catch (const Error& e) {
        if (e.cls != ErrorClass::Theorem) throw;
        rep.ok = false;
        rep.witnesses = error_witnesses(e);
        rep.details["error"] = e.what();
    }
}

void cmd_verify(const Args& a, Session& session, Report& rep) {
    const std::string& which = arg(a, 1, "suite name");
    rep.command = "verify " + which;

    std::vector<std::string> names;
    if (which == "all")
        names = {"all"};
    else if (which == "lema")
        names = {"lema"};
    else if (which == "hash")
        names = {"hash"};
    else if (which == "closure")
        names = {"closure"};
    else if (which == "singleR")
        names = {"single-ring"};
    else if (which == "andremodule")
        names = {"andremodule"};
    else
        names = {which};

    Json criteria = Json::array();
    bool all_ok = true;

    if (which == "all" && a.positional.size() > 2) {
        const std::string& path = a.positional[2];
        std::size_t blocks = session.load_all(path);
        Json j = Json::object();
        j["name"] = "document " + path;
        j["ok"] = true;
        j["info"] = std::to_string(blocks) + " blocks validated";
        criteria.push_back(j);
    }

    for (const auto& suite : suites::run_suites(names, a.options.seed)) {
        for (const auto& line : suite.lines) {
            Json j = Json::object();
            j["name"] = suite.name + "/" + line.name;
            j["ok"] = line.ok;
            if (!line.info.empty()) j["info"] = line.info;
            criteria.push_back(j);
            if (!line.ok) {
                all_ok = false;
                rep.witnesses.push_back(Witness{suite.name + "/" + line.name, {}});
            }
        }
    }
    rep.ok = all_ok;
    rep.details["criteria"] = criteria;
}

void cmd_catalog(const Args& a, Report& rep) {
    if (arg(a, 1, "catalog action") != "scan")
        fail(ErrorClass::Usage, "UnknownCommand", "only 'catalog scan <dir>' is supported");
    rep.command = "catalog scan";
    CatalogResult res = catalog_scan(arg(a, 2, "directory"));
    rep.details["files"] = res.files;
    rep.details["blocks"] = res.blocks;
    rep.details["index"] = res.index_path;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv, Session& session) {
    CommandResult result;
    Report& rep = result.report;
    auto started = Clock::now();

    try {
        Args a = parse_args(argv);
        result.options = a.options;
        if (a.positional.empty())
            fail(ErrorClass::Usage, "MissingArgument",
                 "usage: <check|quasikernel|enumerate|product|quotient|submodules|factorize|"
                 "decompose|tfae|verify|catalog> ...");
        const std::string& verb = a.positional[0];
        rep.command = verb;

        if (verb == "check")
            cmd_check(a, session, rep, result.document);
        else if (verb == "quasikernel")
            cmd_quasikernel(a, session, rep);
        else if (verb == "enumerate")
            cmd_enumerate(a, session, rep, result.document);
        else if (verb == "product")
            cmd_product(a, session, rep, result.document);
        else if (verb == "quotient")
            cmd_quotient(a, session, rep, result.document);
        else if (verb == "submodules")
            cmd_submodules(a, session, rep);
        else if (verb == "factorize")
            cmd_factorize(a, session, rep);
        else if (verb == "decompose")
            cmd_decompose(a, session, rep);
        else if (verb == "tfae")
            cmd_tfae(a, session, rep);
        else if (verb == "verify")
            cmd_verify(a, session, rep);
        else if (verb == "catalog")
            cmd_catalog(a, rep);
        else
            fail(ErrorClass::Usage, "UnknownCommand", "unknown command: " + verb);
    } catch (const Error& e) {
        rep.ok = false;
        rep.witnesses = error_witnesses(e);
        rep.details["error"] = e.what();
        rep.details["kind"] = e.kind;
        rep.exit_code = 2;
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        return result;
    } catch (const std::exception& e) {
        rep.ok = false;
        rep.witnesses.push_back(Witness{"InternalError", {}});
        rep.details["error"] = e.what();
        rep.exit_code = 2;
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        return result;
    }

    rep.exit_code = rep.ok ? 0 : 1;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();

    if (result.document && result.options.out) {
        std::ofstream out(*result.options.out, std::ios::trunc);
        if (!out) {
            rep.ok = false;
            rep.exit_code = 2;
            rep.details["error"] = "cannot write " + *result.options.out;
        } else {
            out << *result.document;
            rep.details["out"] = *result.options.out;
            result.document.reset();
        }
    }
    return result;
}

}  // namespace natk
