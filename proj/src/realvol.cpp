#include "locsol/realvol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <type_traits>
#include <vector>

#include "locsol/poly.hpp"
#include "locsol/rng.hpp"

namespace locsol::realvol {

namespace {

static_assert(sizeof(long) == 8, "int64 box mantissas assume LP64");

template <class T>
int tsign(const T& v) {
    if constexpr (std::is_same_v<T, std::int64_t>)
        return (v > 0) - (v < 0);
    else
        return sgn(v);
}

// f(x) < 0 for all x >= 0, coefficients low-first at a shared scale.
template <class T>
bool neg_on_nonneg(const std::array<T, 5>& c) {
    int top = 4;
    while (top >= 0 && tsign(c[top]) == 0) --top;
    if (top < 0) return false;                // zero polynomial
    if (tsign(c[0]) >= 0) return false;       // f(0) must be negative
    if (tsign(c[top]) > 0) return false;      // dominant coefficient must force -inf
    int v = 0, last = 0;
    for (int i = 0; i <= top; ++i) {
        int s = tsign(c[i]);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    if (v == 0) return true;   // Descartes: no positive roots
    if (v == 1) return false;  // Descartes: exactly one positive root
    std::vector<Integer> z;
    z.reserve(top + 1);
    for (int i = 0; i <= top; ++i) z.emplace_back(c[i]);
    return count_positive_roots_integer(z) == 0;
}

template <class T>
std::array<T, 5> reflect(std::array<T, 5> c) {
    c[1] = -c[1];
    c[3] = -c[3];
    return c;
}

template <class T>
bool neg_on_nonpos(const std::array<T, 5>& c) {
    return neg_on_nonneg(reflect(c));
}

// Corner quartics, low-first from box corners in (a..e) index order.
template <class T>
BoxVerdict classify_core(const std::array<T, 5>& lo, const std::array<T, 5>& hi) {
    if (tsign(lo[0]) >= 0) return BoxVerdict::NoneNegDef;  // a >= 0 on the whole box
    std::array<T, 5> fu = {hi[4], hi[3], hi[2], hi[1], hi[0]};
    std::array<T, 5> ft = {hi[4], lo[3], hi[2], lo[1], hi[0]};
    if (neg_on_nonneg(fu) && neg_on_nonpos(ft)) return BoxVerdict::AllNegDef;
    std::array<T, 5> fl = {lo[4], lo[3], lo[2], lo[1], lo[0]};
    std::array<T, 5> fs = {lo[4], hi[3], lo[2], hi[1], lo[0]};
    if (!neg_on_nonneg(fl) || !neg_on_nonpos(fs)) return BoxVerdict::NoneNegDef;
    return BoxVerdict::Undecided;
}

// ---------------------------------------------------------------------------
// Branch and bound machinery.  Boxes carry int64 mantissas at a shared
// power-of-two scale; every edge length is a power of two, so depth can be
// recovered from the edge lengths alone (one bisection halves one edge).
// ---------------------------------------------------------------------------

struct IBox {
    std::array<std::int64_t, 5> lo, hi;
    int k;  // value = mantissa / 2^k
};

int fixed_coord(const IBox& b) {
    for (int i = 0; i < 5; ++i)
        if (b.lo[i] == b.hi[i]) return i;
    return -1;
}

int face_weight(const IBox& b) {
    switch (fixed_coord(b)) {
        case 0: return 2;  // a = -1; covers e = -1 by coefficient reversal
        case 1: return 4;  // b = +1; covers b = -1 and d = +-1 by symmetry
        case 2: return 1;  // each c face separately
        case -1: return 1;
        default: throw std::logic_error("unexpected fixed face");
    }
}

int log2_exact(std::int64_t v) {
    if (v <= 0 || (v & (v - 1)) != 0) return -1;
    int b = 0;
    while (v > 1) {
        v >>= 1;
        ++b;
    }
    return b;
}

int box_depth(const IBox& b) {
    int depth = 0;
    for (int i = 0; i < 5; ++i) {
        if (b.lo[i] == b.hi[i]) continue;
        int lb = log2_exact(b.hi[i] - b.lo[i]);
        if (lb < 0) throw checkpoint_error("box edge is not a power of two");
        depth += 1 + b.k - lb;
    }
    return depth;
}

// Exact box volume (over free coordinates) as a dyadic.
Dyadic box_volume(const IBox& b) {
    Integer m(1);
    int free_cnt = 0;
    for (int i = 0; i < 5; ++i) {
        if (b.lo[i] == b.hi[i]) continue;
        m *= Integer(b.hi[i] - b.lo[i]);
        ++free_cnt;
    }
    return Dyadic(m, -b.k * free_cnt);
}

std::pair<IBox, IBox> bisect(IBox b) {
    int best = -1;
    std::int64_t best_len = 0;
    for (int i = 4; i >= 0; --i) {
        std::int64_t len = b.hi[i] - b.lo[i];
        if (len > best_len) {
            best_len = len;
            best = i;
        }
    }
    if (best < 0) throw std::logic_error("bisect: degenerate box");
    if ((b.lo[best] + b.hi[best]) & 1) {
        if (b.k >= 60) throw resource_error("box scale exceeds 2^60");
        for (int i = 0; i < 5; ++i) {
            b.lo[i] *= 2;
            b.hi[i] *= 2;
        }
        ++b.k;
    }
    std::int64_t mid = (b.lo[best] + b.hi[best]) / 2;
    IBox left = b, right = b;
    left.hi[best] = mid;
    right.lo[best] = mid;
    return {left, right};
}

DyadicBox to_dyadic_box(const IBox& b) {
    DyadicBox out;
    for (int i = 0; i < 5; ++i) {
        out.lo[i] = Dyadic(Integer(b.lo[i]), -b.k);
        out.hi[i] = Dyadic(Integer(b.hi[i]), -b.k);
    }
    return out;
}

IBox from_dyadic_box(const DyadicBox& d) {
    long k = 0;
    for (int i = 0; i < 5; ++i) {
        k = std::max(k, -d.lo[i].exponent());
        k = std::max(k, -d.hi[i].exponent());
    }
    if (k > 60) throw checkpoint_error("checkpoint box scale exceeds 2^60");
    IBox b;
    b.k = static_cast<int>(k);
    for (int i = 0; i < 5; ++i) {
        Integer lm = d.lo[i].mantissa() << static_cast<unsigned>(k + d.lo[i].exponent());
        Integer hm = d.hi[i].mantissa() << static_cast<unsigned>(k + d.hi[i].exponent());
        if (!lm.fits_slong_p() || !hm.fits_slong_p()) throw checkpoint_error("checkpoint box mantissa overflow");
        b.lo[i] = lm.get_si();
        b.hi[i] = hm.get_si();
        if (b.lo[i] > b.hi[i]) throw checkpoint_error("checkpoint box has lo > hi");
    }
    return b;
}

std::vector<IBox> initial_boxes(Method method) {
    if (method == Method::Plain5D) {
        IBox root;
        root.k = 0;
        root.lo.fill(-1);
        root.hi.fill(1);
        return {root};
    }
    // Scaled 4D faces: a = -1 (w2), b = +1 (w4), c = +1, c = -1 (w1 each).
    // The a = +1 and e = +1 faces hold no negative definite quartics, and the
    // remaining faces map onto these four under x -> -x and reversal.
    std::vector<IBox> faces;
    for (int idx = 0; idx < 4; ++idx) {
        IBox b;
        b.k = 0;
        b.lo.fill(-1);
        b.hi.fill(1);
        switch (idx) {
            case 0: b.lo[0] = b.hi[0] = -1; break;
            case 1: b.lo[1] = b.hi[1] = 1; break;
            case 2: b.lo[2] = b.hi[2] = 1; break;
            case 3: b.lo[2] = b.hi[2] = -1; break;
        }
        faces.push_back(b);
    }
    return faces;
}

std::string method_name(Method m) { return m == Method::Plain5D ? "plain5d" : "scaled4d"; }

Method parse_method(const std::string& s) {
    if (s == "plain5d") return Method::Plain5D;
    if (s == "scaled4d") return Method::Scaled4D;
    throw checkpoint_error("unknown method '" + s + "'");
}

struct EngineState {
    Method method;
    std::vector<IBox> pending;
    Dyadic v1, v2;  // weighted in Scaled4D mode
};

void save_state(const std::string& path, const EngineState& st, int depth) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw resource_error("cannot write checkpoint '" + path + "'");
    out << "locsol-ckpt v1 method=" << method_name(st.method) << " depth=" << depth << "\n";
    for (const IBox& b : st.pending) {
        DyadicBox d = to_dyadic_box(b);
        for (int i = 0; i < 5; ++i) out << (i ? " " : "") << d.lo[i].to_string();
        for (int i = 0; i < 5; ++i) out << " " << d.hi[i].to_string();
        out << "\n";
    }
    out << "v1 " << st.v1.to_string() << "\n";
    out << "v2 " << st.v2.to_string() << "\n";
    if (!out) throw resource_error("checkpoint write failed for '" + path + "'");
}

EngineState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw checkpoint_error("cannot read checkpoint '" + path + "'");
    std::string header;
    if (!std::getline(in, header)) throw checkpoint_error("empty checkpoint");
    std::istringstream hs(header);
    std::string magic, ver, field;
    hs >> magic >> ver;
    if (magic != "locsol-ckpt" || ver != "v1") throw checkpoint_error("bad checkpoint header");
    EngineState st;
    bool have_method = false;
    while (hs >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw checkpoint_error("bad header field '" + field + "'");
        std::string key = field.substr(0, eq), val = field.substr(eq + 1);
        if (key == "method") {
            st.method = parse_method(val);
            have_method = true;
        }
        // depth is informational; box depths are recovered from edge lengths
    }
    if (!have_method) throw checkpoint_error("checkpoint header lacks method");
    bool saw_v1 = false, saw_v2 = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        try {
            if (tok == "v1") {
                ls >> tok;
                st.v1 = Dyadic::parse(tok);
                saw_v1 = true;
            } else if (tok == "v2") {
                ls >> tok;
                st.v2 = Dyadic::parse(tok);
                saw_v2 = true;
            } else {
                DyadicBox d;
                d.lo[0] = Dyadic::parse(tok);
                for (int i = 1; i < 5; ++i) {
                    ls >> tok;
                    d.lo[i] = Dyadic::parse(tok);
                }
                for (int i = 0; i < 5; ++i) {
                    ls >> tok;
                    d.hi[i] = Dyadic::parse(tok);
                }
                if (!ls) throw checkpoint_error("short box line");
                st.pending.push_back(from_dyadic_box(d));
                (void)box_depth(st.pending.back());  // validates edge lengths
            }
        } catch (const std::invalid_argument& e) {
            throw checkpoint_error(std::string("corrupt checkpoint: ") + e.what());
        }
    }
    if (!saw_v1 || !saw_v2) throw checkpoint_error("checkpoint lacks accumulator lines");
    return st;
}

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    if (const char* env = std::getenv("LOCSOL_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

BoxVerdict classify_int(const IBox& b) {
    return classify_core<std::int64_t>(b.lo, b.hi);
}

}  // namespace

bool no_real_roots(const Quartic5& f) {
    if (f.a.is_zero())
        throw std::domain_error("no_real_roots: leading coefficient is zero");
    long e = std::min({f.a.exponent(), f.b.exponent(), f.c.exponent(), f.d.exponent(), f.e.exponent(), 0L});
    auto scaled = [&](const Dyadic& v) { return v.mantissa() << static_cast<unsigned>(v.exponent() - e); };
    Integer a = scaled(f.a), b = scaled(f.b), c = scaled(f.c), d = scaled(f.d), ee = scaled(f.e);
    Integer a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d, e2 = ee * ee;
    Integer disc = 256 * a2 * a * e2 * ee - 192 * a2 * b * d * e2 - 128 * a2 * c2 * e2 + 144 * a2 * c * d2 * ee -
                   27 * a2 * d2 * d2 + 144 * a * b2 * c * e2 - 6 * a * b2 * d2 * ee - 80 * a * b * c2 * d * ee +
                   18 * a * b * c * d2 * d + 16 * a * c2 * c2 * ee - 4 * a * c2 * c * d2 - 27 * b2 * b2 * e2 +
                   18 * b2 * b * c * d * ee - 4 * b2 * b * d2 * d - 4 * b2 * c2 * c * ee + b2 * c2 * d2;
    if (disc <= 0) return false;
    Integer H = 8 * a * c - 3 * b2;
    if (H > 0) return true;
    Integer Q = 3 * b2 * b2 - 16 * a * b2 * c + 16 * a2 * c2 + 16 * a2 * b * d - 64 * a2 * a * ee;
    return Q < 0;
}

bool is_negative_definite(const Quartic5& f) {
    if (f.a.sgn() >= 0) return false;
    return no_real_roots(f);
}

BoxVerdict classify_box(const DyadicBox& box) {
    long e = 0;
    for (int i = 0; i < 5; ++i) {
        e = std::min(e, box.lo[i].exponent());
        e = std::min(e, box.hi[i].exponent());
        if (box.lo[i] > box.hi[i])
            throw std::invalid_argument("classify_box: lo > hi");
    }
    std::array<Integer, 5> lo, hi;
    for (int i = 0; i < 5; ++i) {
        lo[i] = box.lo[i].mantissa() << static_cast<unsigned>(box.lo[i].exponent() - e);
        hi[i] = box.hi[i].mantissa() << static_cast<unsigned>(box.hi[i].exponent() - e);
    }
    return classify_core<Integer>(lo, hi);
}

BoundsReport run_bounds(const RunOptions& opt) {
    if (opt.depth < 0)
        throw std::invalid_argument("run_bounds: negative depth");
    EngineState st;
    if (opt.resume_from) {
        st = load_state(*opt.resume_from);
        if (st.method != opt.method)
            throw checkpoint_error("checkpoint method does not match the requested method");
    } else {
        st.method = opt.method;
        st.pending = initial_boxes(opt.method);
    }

    // Scaled4D depth labels are calibrated to the standard benchmark figures
    // for this computation (volume granularity 5*2^(d+3) at label d): a
    // label-d run bisects each symmetry face to depth d+2.
    const int depth_cap = opt.depth + (st.method == Method::Scaled4D ? 2 : 0);
    const bool keep_frontier = opt.checkpoint_out.has_value();
    const int W = resolve_workers(opt.workers);
    std::uint64_t processed = 0;
    std::vector<IBox> final_undecided;
    Dyadic und;
    std::mutex sink_mutex;

    // Per-face exact accounting (native runs): v1 + v2 + undecided = face volume.
    struct FaceAcct {
        Dyadic v1, v2, und;
    };
    std::array<FaceAcct, 5> faces{};  // index 4 = no fixed face (Plain5D)
    auto face_index = [](const IBox& b) {
        int fc = fixed_coord(b);
        if (fc == -1) return 4;
        if (fc == 2) return b.lo[2] > 0 ? 2 : 3;
        return fc;
    };

    struct WorkerOut {
        Dyadic v1, v2, und;
        std::array<FaceAcct, 5> faces{};
        std::vector<IBox> next, capped;
        std::uint64_t processed = 0;
    };

    while (!st.pending.empty()) {
        std::size_t n = st.pending.size();
        std::size_t chunk = (n + W - 1) / W;
        std::vector<WorkerOut> outs(W);
        std::vector<std::thread> threads;
        for (int wi = 0; wi < W; ++wi) {
            threads.emplace_back([&, wi] {
                WorkerOut& out = outs[wi];
                std::size_t begin = wi * chunk, end = std::min(n, begin + chunk);
                for (std::size_t i = begin; i < end; ++i) {
                    const IBox& b = st.pending[i];
                    int depth = box_depth(b);
                    BoxVerdict v = classify_int(b);
                    ++out.processed;
                    int w = st.method == Method::Scaled4D ? face_weight(b) : 1;
                    if (v == BoxVerdict::AllNegDef || v == BoxVerdict::NoneNegDef) {
                        Dyadic vol = box_volume(b);
                        Dyadic wvol = Dyadic(Integer(w), 0) * vol;
                        int fi = face_index(b);
                        if (v == BoxVerdict::AllNegDef) {
                            out.v1 = out.v1 + wvol;
                            out.faces[fi].v1 = out.faces[fi].v1 + vol;
                        } else {
                            out.v2 = out.v2 + wvol;
                            out.faces[fi].v2 = out.faces[fi].v2 + vol;
                        }
                        if (opt.label_sink) {
                            std::lock_guard<std::mutex> g(sink_mutex);
                            opt.label_sink(to_dyadic_box(b), v);
                        }
                    } else if (depth >= depth_cap) {
                        if (keep_frontier) out.capped.push_back(b);
                        Dyadic vol = box_volume(b);
                        out.und = out.und + Dyadic(Integer(w), 0) * vol;
                        out.faces[face_index(b)].und = out.faces[face_index(b)].und + vol;
                    } else {
                        auto [l, r] = bisect(b);
                        out.next.push_back(l);
                        out.next.push_back(r);
                    }
                }
            });
        }
        for (auto& t : threads) t.join();
        std::vector<IBox> next;
        for (auto& out : outs) {
            st.v1 = st.v1 + out.v1;
            st.v2 = st.v2 + out.v2;
            und = und + out.und;
            processed += out.processed;
            for (int f = 0; f < 5; ++f) {
                faces[f].v1 = faces[f].v1 + out.faces[f].v1;
                faces[f].v2 = faces[f].v2 + out.faces[f].v2;
                faces[f].und = faces[f].und + out.faces[f].und;
            }
            next.insert(next.end(), out.next.begin(), out.next.end());
            final_undecided.insert(final_undecided.end(), out.capped.begin(), out.capped.end());
        }
        if (next.size() + final_undecided.size() > opt.box_limit) {
            st.pending = std::move(next);
            st.pending.insert(st.pending.end(), final_undecided.begin(), final_undecided.end());
            if (opt.checkpoint_out) save_state(*opt.checkpoint_out, st, opt.depth);
            throw resource_error("work queue exceeded box_limit (" + std::to_string(opt.box_limit) + " boxes)");
        }
        st.pending = std::move(next);
    }

    st.pending = std::move(final_undecided);
    if (opt.checkpoint_out) save_state(*opt.checkpoint_out, st, opt.depth);

    BoundsReport rep;
    rep.method = st.method;
    rep.depth = opt.depth;
    rep.v1 = st.v1;
    rep.v2 = st.v2;
    rep.undecided = und;
    rep.boxes_processed = processed;
    if (!opt.resume_from) {
        static const char* kFaceNames[5] = {"a=-1", "b=+1", "c=+1", "c=-1", "full"};
        for (int f = 0; f < 5; ++f) {
            bool used = (st.method == Method::Plain5D) ? (f == 4) : (f < 4);
            if (!used) continue;
            FaceAccount fa;
            fa.name = kFaceNames[f];
            fa.v1 = faces[f].v1;
            fa.v2 = faces[f].v2;
            fa.undecided = faces[f].und;
            fa.volume = Rational(st.method == Method::Plain5D ? 32 : 16);
            rep.faces.push_back(std::move(fa));
        }
    }
    if (st.method == Method::Plain5D) {
        rep.total = Rational(32);
        rep.rho_lower = rep.v2.to_rational() / 32;
        rep.rho_upper = Rational(1) - rep.v1.to_rational() / 32;
    } else {
        rep.total = Rational(128);
        rep.rho_lower = (Rational(32) + rep.v2.to_rational()) / 160;
        rep.rho_upper = Rational(1) - rep.v1.to_rational() / 160;
    }
    return rep;
}

RealMcResult monte_carlo_real(ModelKind model, long long n, std::uint64_t seed, int workers) {
    if (n < 1)
        throw std::domain_error("monte_carlo_real: n must be >= 1");
    CounterRng rng(seed);
    const int W = resolve_workers(workers);
    std::vector<long long> hits(W, 0);
    auto sample_negdef = [&](long long i) {
        if (model == ModelKind::PlainBQ) {
            std::array<std::int64_t, 5> m;
            for (int s = 0; s < 5; ++s) m[s] = rng.unit_mantissa(i, s);
            if (m[0] >= 0 || m[4] >= 0) return false;  // a >= 0 or f(0) >= 0
            Quartic5 f{Dyadic(Integer(m[0]), -52), Dyadic(Integer(m[1]), -52), Dyadic(Integer(m[2]), -52),
                       Dyadic(Integer(m[3]), -52), Dyadic(Integer(m[4]), -52)};
            return is_negative_definite(f);
        }
        std::array<std::int64_t, 8> m;  // l, m, n, a..e at scale 2^-52
        for (int s = 0; s < 8; ++s) m[s] = rng.unit_mantissa(i, s);
        // D = h^2 + 4f at scale 2^-104.
        Integer l(m[0]), mm(m[1]), nn(m[2]);
        Integer scale = Integer(1) << 52;
        std::array<Integer, 5> D = {l * l + 4 * m[3] * scale, 2 * l * mm + 4 * m[4] * scale,
                                    mm * mm + 2 * l * nn + 4 * m[5] * scale, 2 * mm * nn + 4 * m[6] * scale,
                                    nn * nn + 4 * m[7] * scale};
        if (sgn(D[0]) >= 0 || sgn(D[4]) >= 0) return false;
        Quartic5 f{Dyadic(D[0], -104), Dyadic(D[1], -104), Dyadic(D[2], -104), Dyadic(D[3], -104),
                   Dyadic(D[4], -104)};
        return is_negative_definite(f);
    };
    std::vector<std::thread> threads;
    for (int wi = 0; wi < W; ++wi) {
        threads.emplace_back([&, wi] {
            long long lo = n * wi / W, hi = n * (wi + 1) / W, h = 0;
            for (long long i = lo; i < hi; ++i)
                if (!sample_negdef(i)) ++h;  // soluble over R iff not negative definite
            hits[wi] = h;
        });
    }
    for (auto& t : threads) t.join();
    RealMcResult r;
    r.samples = n;
    for (long long h : hits) r.soluble += h;
    r.estimate = Rational(Integer(static_cast<long>(r.soluble)), Integer(static_cast<long>(n)));
    r.estimate.canonicalize();
    double est = mpq_get_d(r.estimate.get_mpq_t());
    r.err4 = 4.0 * std::sqrt(std::max(est * (1.0 - est), 1e-12) / static_cast<double>(n));
    return r;
}

}  // namespace locsol::realvol
