#include "cobar/deffile.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cobar {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t c = s.find(',', pos);
        if (c == std::string::npos) c = s.size();
        std::string item = trim(s.substr(pos, c - pos));
        if (!item.empty()) out.push_back(item);
        pos = c + 1;
    }
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

// split an expression at top-level +/- boundaries; returns signed chunks
std::vector<std::pair<int, std::string>> split_summands(const std::string& s, int line) {
    std::vector<std::pair<int, std::string>> out;
    int depth = 0, sign = 1;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-') && !trim(cur).empty()) {
            out.push_back({sign, trim(cur)});
            cur.clear();
            sign = (c == '-') ? -1 : 1;
            continue;
        }
        if (depth == 0 && (c == '+' || c == '-') && trim(cur).empty()) {
            // leading sign
            sign *= (c == '-') ? -1 : 1;
            continue;
        }
        cur += c;
    }
    if (depth != 0) throw ParseError("unbalanced parentheses", line);
    if (!trim(cur).empty()) out.push_back({sign, trim(cur)});
    return out;
}

}  // namespace

TensorExpr parse_tensor_expr(const RingCtxPtr& ctx, const std::string& text) {
    TensorExpr out;
    for (const auto& [sign, chunk] : split_summands(text, 0)) {
        std::size_t mark = chunk.find("(*)");
        if (mark == std::string::npos)
            throw InvalidArgument("tensor expression term lacks '(*)': " + chunk);
        Poly left = parse_poly(ctx, trim(chunk.substr(0, mark)));
        Poly right = parse_poly(ctx, trim(chunk.substr(mark + 3)));
        if (sign < 0) left = -left;
        out.emplace_back(std::move(left), std::move(right));
    }
    return out;
}

DefFile parse_def_file(const std::string& text) {
    DefFile f;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    enum class Sec { none, field, algebra, map, algebroid, comodule, comodule_map, complex };
    Sec sec = Sec::none;

    auto current_line = [&] { return line_no; };
    auto need = [&](bool cond, const std::string& msg) {
        if (!cond) throw ParseError(msg, current_line());
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        auto hash = line.find('#');
        if (hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;

        if (line.front() == '[') {
            need(line.back() == ']', "expected ']' at end of section header");
            std::string head = trim(line.substr(1, line.size() - 2));
            std::istringstream hs(head);
            std::string kind, name;
            hs >> kind >> name;
            need(valid_name(name), "section needs a valid name");
            if (kind == "field") {
                sec = Sec::field;
                f.fields.push_back({name, 0});
                f.order.push_back({DefFile::Kind::field, f.fields.size() - 1});
            } else if (kind == "algebra") {
                sec = Sec::algebra;
                f.algebras.push_back({});
                f.algebras.back().name = name;
                f.order.push_back({DefFile::Kind::algebra, f.algebras.size() - 1});
            } else if (kind == "map") {
                sec = Sec::map;
                f.maps.push_back({});
                f.maps.back().name = name;
                f.order.push_back({DefFile::Kind::map, f.maps.size() - 1});
            } else if (kind == "algebroid") {
                sec = Sec::algebroid;
                f.algebroids.push_back({});
                f.algebroids.back().name = name;
                f.order.push_back({DefFile::Kind::algebroid, f.algebroids.size() - 1});
            } else if (kind == "comodule") {
                sec = Sec::comodule;
                f.comodules.push_back({});
                f.comodules.back().name = name;
                f.order.push_back({DefFile::Kind::comodule, f.comodules.size() - 1});
            } else if (kind == "comodulemap") {
                sec = Sec::comodule_map;
                f.comodule_maps.push_back({});
                f.comodule_maps.back().name = name;
                f.order.push_back({DefFile::Kind::comodule_map, f.comodule_maps.size() - 1});
            } else if (kind == "complex") {
                sec = Sec::complex;
                f.complexes.push_back({});
                f.complexes.back().name = name;
                f.order.push_back({DefFile::Kind::complex, f.complexes.size() - 1});
            } else {
                throw ParseError("unknown section kind '" + kind + "'", current_line());
            }
            continue;
        }

        // "lhs -> rhs" arrows for map images
        auto arrow = line.find("->");
        if (arrow != std::string::npos && sec == Sec::map) {
            f.maps.back().images.push_back(
                {trim(line.substr(0, arrow)), trim(line.substr(arrow + 2))});
            continue;
        }

        auto eq = line.find('=');
        need(eq != std::string::npos, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        switch (sec) {
            case Sec::none:
                throw ParseError("entry outside of any section", current_line());
            case Sec::field:
                need(key == "char", "field sections only take 'char'");
                f.fields.back().characteristic = static_cast<unsigned>(std::stoul(value));
                break;
            case Sec::algebra: {
                DefAlgebra& a = f.algebras.back();
                if (key == "field") a.field = value;
                else if (key == "vars") a.vars = split_csv(value);
                else if (key == "order") a.order = value;
                else if (key == "rel") a.rels.push_back(value);
                else throw ParseError("unknown algebra key '" + key + "'", current_line());
                break;
            }
            case Sec::map: {
                DefMap& m = f.maps.back();
                if (key == "source") m.source = value;
                else if (key == "target") m.target = value;
                else throw ParseError("unknown map key '" + key + "'", current_line());
                break;
            }
            case Sec::algebroid: {
                DefAlgebroid& a = f.algebroids.back();
                if (key == "a0") a.a0 = value;
                else if (key == "a1") a.a1 = value;
                else if (key == "etaL") a.eta_l = value;
                else if (key == "etaR") a.eta_r = value;
                else if (key == "counit") a.counit = value;
                else if (key == "antipode") a.antipode = value;
                else if (key.rfind("comult ", 0) == 0)
                    a.comult.push_back({trim(key.substr(7)), value});
                else if (key == "flatness") {
                    auto colon = value.find(':');
                    a.flatness = trim(colon == std::string::npos ? value : value.substr(0, colon));
                    if (colon != std::string::npos) a.basis = split_csv(value.substr(colon + 1));
                } else {
                    throw ParseError("unknown algebroid key '" + key + "'", current_line());
                }
                break;
            }
            case Sec::comodule: {
                DefComodule& c = f.comodules.back();
                if (key == "algebroid") c.algebroid = value;
                else if (key == "gens") c.gens = split_csv(value);
                else if (key == "rel") c.rels.push_back(value);
                else if (key.rfind("psi ", 0) == 0) c.psi.push_back({trim(key.substr(4)), value});
                else throw ParseError("unknown comodule key '" + key + "'", current_line());
                break;
            }
            case Sec::comodule_map: {
                DefComoduleMap& m = f.comodule_maps.back();
                if (key == "source") m.source = value;
                else if (key == "target") m.target = value;
                else if (key.rfind("f ", 0) == 0) m.images.push_back({trim(key.substr(2)), value});
                else throw ParseError("unknown comodulemap key '" + key + "'", current_line());
                break;
            }
            case Sec::complex: {
                DefComplex& c = f.complexes.back();
                if (key == "algebroid") c.algebroid = value;
                else if (key.rfind("term ", 0) == 0)
                    c.terms.push_back({std::stoi(key.substr(5)), value});
                else if (key.rfind("d ", 0) == 0)
                    c.diffs.push_back({std::stoi(key.substr(2)), value});
                else throw ParseError("unknown complex key '" + key + "'", current_line());
                break;
            }
        }
    }
    return f;
}

std::string serialize_def_file(const DefFile& f) {
    std::ostringstream out;
    bool first = true;
    auto gap = [&] {
        if (!first) out << "\n";
        first = false;
    };
    for (const auto& [kind, idx] : f.order) {
        switch (kind) {
            case DefFile::Kind::field: {
                const auto& x = f.fields[idx];
                gap();
                out << "[field " << x.name << "]\n";
                out << "char = " << x.characteristic << "\n";
                break;
            }
            case DefFile::Kind::algebra: {
                const auto& x = f.algebras[idx];
                gap();
                out << "[algebra " << x.name << "]\n";
                out << "field = " << x.field << "\n";
                out << "vars = ";
                for (std::size_t i = 0; i < x.vars.size(); ++i)
                    out << (i ? ", " : "") << x.vars[i];
                out << "\n";
                out << "order = " << x.order << "\n";
                for (const auto& r : x.rels) out << "rel = " << r << "\n";
                break;
            }
            case DefFile::Kind::map: {
                const auto& x = f.maps[idx];
                gap();
                out << "[map " << x.name << "]\n";
                out << "source = " << x.source << "\n";
                out << "target = " << x.target << "\n";
                for (const auto& [v, e] : x.images) out << v << " -> " << e << "\n";
                break;
            }
            case DefFile::Kind::algebroid: {
                const auto& x = f.algebroids[idx];
                gap();
                out << "[algebroid " << x.name << "]\n";
                out << "a0 = " << x.a0 << "\n";
                out << "a1 = " << x.a1 << "\n";
                out << "etaL = " << x.eta_l << "\n";
                out << "etaR = " << x.eta_r << "\n";
                out << "counit = " << x.counit << "\n";
                out << "antipode = " << x.antipode << "\n";
                for (const auto& [v, e] : x.comult) out << "comult " << v << " = " << e << "\n";
                out << "flatness = " << x.flatness;
                if (!x.basis.empty()) {
                    out << ": ";
                    for (std::size_t i = 0; i < x.basis.size(); ++i)
                        out << (i ? ", " : "") << x.basis[i];
                }
                out << "\n";
                break;
            }
            case DefFile::Kind::comodule: {
                const auto& x = f.comodules[idx];
                gap();
                out << "[comodule " << x.name << "]\n";
                out << "algebroid = " << x.algebroid << "\n";
                out << "gens = ";
                for (std::size_t i = 0; i < x.gens.size(); ++i)
                    out << (i ? ", " : "") << x.gens[i];
                out << "\n";
                for (const auto& r : x.rels) out << "rel = " << r << "\n";
                for (const auto& [g, e] : x.psi) out << "psi " << g << " = " << e << "\n";
                break;
            }
            case DefFile::Kind::comodule_map: {
                const auto& x = f.comodule_maps[idx];
                gap();
                out << "[comodulemap " << x.name << "]\n";
                out << "source = " << x.source << "\n";
                out << "target = " << x.target << "\n";
                for (const auto& [g, e] : x.images) out << "f " << g << " = " << e << "\n";
                break;
            }
            case DefFile::Kind::complex: {
                const auto& x = f.complexes[idx];
                gap();
                out << "[complex " << x.name << "]\n";
                out << "algebroid = " << x.algebroid << "\n";
                for (const auto& [n, t] : x.terms) out << "term " << n << " = " << t << "\n";
                for (const auto& [n, d] : x.diffs) out << "d " << n << " = " << d << "\n";
                break;
            }
        }
    }
    return out.str();
}

// --- building ------------------------------------------------------------------

namespace {

// parse a linear combination of generators with algebra coefficients by
// treating generator names as extra variables of degree exactly one
std::vector<AlgebraElement> parse_combination(const AlgebraPtr& ring,
                                              const std::vector<std::string>& gens,
                                              const std::string& text) {
    std::vector<std::string> vars = ring->ctx()->var_names;
    std::size_t base = vars.size();
    for (const auto& g : gens) {
        if (ring->ctx()->var_index(g) >= 0)
            throw InvalidArgument("generator name '" + g + "' collides with a ring variable");
        vars.push_back(g);
    }
    auto ext = make_ring_ctx(ring->characteristic(), vars);
    Poly p = parse_poly(ext, text);
    std::vector<AlgebraElement> out(gens.size(), ring->zero());
    for (const auto& t : p.terms()) {
        long gen = -1;
        Monomial coeff(ring->nvars());
        for (std::size_t v = 0; v < vars.size(); ++v) {
            if (!t.mono[v]) continue;
            if (v < base) {
                coeff[v] = t.mono[v];
            } else {
                if (gen != -1 || t.mono[v] != 1)
                    throw InvalidArgument("term is not linear in the generators: " + text);
                gen = static_cast<long>(v - base);
            }
        }
        if (gen == -1) throw InvalidArgument("term misses a generator: " + text);
        out[static_cast<std::size_t>(gen)] =
            out[static_cast<std::size_t>(gen)] +
            ring->nf(Poly::monomial(ring->ctx(), coeff, t.coeff));
    }
    return out;
}

}  // namespace

Workspace build_workspace(const DefFile& f, uint64_t budget) {
    Workspace w;
    std::map<std::string, unsigned> field_chars;

    auto algebra_of = [&](const std::string& name, const char* what) -> AlgebraPtr {
        auto it = w.algebras.find(name);
        if (it == w.algebras.end())
            throw InvalidArgument(std::string(what) + " references unknown algebra '" + name + "'");
        return it->second;
    };

    for (const auto& [kind, idx] : f.order) {
        switch (kind) {
            case DefFile::Kind::field: {
                const auto& x = f.fields[idx];
                field_chars[x.name] = x.characteristic;
                w.algebras[x.name] = PresentedAlgebra::field(x.characteristic, budget);
                break;
            }
            case DefFile::Kind::algebra: {
                const auto& x = f.algebras[idx];
                auto fc = field_chars.find(x.field);
                if (fc == field_chars.end())
                    throw InvalidArgument("algebra '" + x.name + "' references unknown field '" +
                                          x.field + "'");
                MonomialOrder order = x.order == "lex" ? MonomialOrder::lex(x.vars.size())
                                                       : MonomialOrder::degrevlex(x.vars.size());
                if (x.order != "lex" && x.order != "degrevlex")
                    throw InvalidArgument("unknown order '" + x.order + "'");
                auto ctx = make_ring_ctx(fc->second, x.vars, order);
                std::vector<Poly> rels;
                for (const auto& r : x.rels) rels.push_back(parse_poly(ctx, r));
                w.algebras[x.name] = PresentedAlgebra::create(ctx, rels, budget);
                break;
            }
            case DefFile::Kind::map: {
                const auto& x = f.maps[idx];
                AlgebraPtr src = algebra_of(x.source, "map"), tgt = algebra_of(x.target, "map");
                std::vector<AlgebraElement> images(src->nvars(), tgt->zero());
                std::vector<bool> seen(src->nvars(), false);
                for (const auto& [v, e] : x.images) {
                    long i = src->ctx()->var_index(v);
                    if (i < 0)
                        throw InvalidArgument("map '" + x.name + "' images unknown variable '" +
                                              v + "'");
                    images[static_cast<std::size_t>(i)] = tgt->parse(e);
                    seen[static_cast<std::size_t>(i)] = true;
                }
                for (std::size_t i = 0; i < seen.size(); ++i)
                    if (!seen[i])
                        throw InvalidArgument("map '" + x.name + "' misses an image for '" +
                                              src->ctx()->var_names[i] + "'");
                w.maps.emplace(x.name, AlgebraMap(src, tgt, images));
                break;
            }
            case DefFile::Kind::algebroid: {
                const auto& x = f.algebroids[idx];
                HopfData d;
                d.name = x.name;
                d.a0 = algebra_of(x.a0, "algebroid");
                d.a1 = algebra_of(x.a1, "algebroid");
                auto map_of = [&](const std::string& n) {
                    auto it = w.maps.find(n);
                    if (it == w.maps.end())
                        throw InvalidArgument("algebroid '" + x.name +
                                              "' references unknown map '" + n + "'");
                    return it->second;
                };
                d.eta_l = map_of(x.eta_l);
                d.eta_r = map_of(x.eta_r);
                d.counit = map_of(x.counit);
                d.antipode = map_of(x.antipode);
                d.comult.assign(d.a1->nvars(), {});
                std::vector<bool> seen(d.a1->nvars(), false);
                for (const auto& [v, e] : x.comult) {
                    long i = d.a1->ctx()->var_index(v);
                    if (i < 0)
                        throw InvalidArgument("comult images unknown variable '" + v + "'");
                    d.comult[static_cast<std::size_t>(i)] = parse_tensor_expr(d.a1->ctx(), e);
                    seen[static_cast<std::size_t>(i)] = true;
                }
                for (std::size_t i = 0; i < seen.size(); ++i)
                    if (!seen[i])
                        throw InvalidArgument("comult misses variable '" +
                                              d.a1->ctx()->var_names[i] + "'");
                if (x.flatness == "free-finite") {
                    d.flatness = Flatness::free_finite;
                    for (const auto& b : x.basis) d.basis.push_back(parse_poly(d.a1->ctx(), b));
                } else if (x.flatness == "projective-certified") {
                    d.flatness = Flatness::projective_certified;
                } else if (x.flatness == "declared-flat") {
                    d.flatness = Flatness::user_declared;
                } else {
                    throw InvalidArgument("unknown flatness level '" + x.flatness + "'");
                }
                w.algebroids[x.name] = HopfAlgebroid::create(std::move(d));
                break;
            }
            case DefFile::Kind::comodule: {
                const auto& x = f.comodules[idx];
                auto hit = w.algebroids.find(x.algebroid);
                if (hit == w.algebroids.end())
                    throw InvalidArgument("comodule '" + x.name +
                                          "' references unknown algebroid '" + x.algebroid + "'");
                const HopfPtr& h = hit->second;
                std::vector<std::vector<AlgebraElement>> rel_cols;
                for (const auto& r : x.rels)
                    rel_cols.push_back(parse_combination(h->a0(), x.gens, r));
                ModulePtr u = FPModule::create(
                    h->a0(), x.gens.size(),
                    Mat::from_columns(h->a0(), x.gens.size(), rel_cols));

                Mat coaction(h->a1(), x.gens.size(), x.gens.size());
                std::vector<bool> seen(x.gens.size(), false);
                for (const auto& [g, e] : x.psi) {
                    auto git = std::find(x.gens.begin(), x.gens.end(), g);
                    if (git == x.gens.end())
                        throw InvalidArgument("psi images unknown generator '" + g + "'");
                    std::size_t j = static_cast<std::size_t>(git - x.gens.begin());
                    seen[j] = true;
                    TensorExpr expr;
                    {
                        // parse with generator names as degree-one markers on the right
                        std::vector<std::string> ext_vars = h->a1()->ctx()->var_names;
                        for (const auto& gn : x.gens) ext_vars.push_back(gn);
                        auto ext = make_ring_ctx(h->a1()->characteristic(), ext_vars);
                        expr = parse_tensor_expr(ext, e);
                        for (auto& [lp, rp] : expr) {
                            // left factor must avoid generator names
                            for (const auto& t : lp.terms())
                                for (std::size_t v = h->a1()->nvars(); v < ext_vars.size(); ++v)
                                    if (t.mono[v])
                                        throw InvalidArgument(
                                            "left tensor factor contains a generator");
                            // right factor: coefficient (over A1) times one generator
                            for (const auto& t : rp.terms()) {
                                long gen = -1;
                                Monomial coeff(h->a1()->nvars());
                                for (std::size_t v = 0; v < ext_vars.size(); ++v) {
                                    if (!t.mono[v]) continue;
                                    if (v < h->a1()->nvars()) coeff[v] = t.mono[v];
                                    else if (gen != -1 || t.mono[v] != 1)
                                        throw InvalidArgument(
                                            "right tensor factor is not linear in generators");
                                    else gen = static_cast<long>(v - h->a1()->nvars());
                                }
                                if (gen < 0)
                                    throw InvalidArgument("right tensor factor misses a generator");
                                // strip the extension: rebuild the left coefficient over A1
                                Poly lp_a1(h->a1()->ctx());
                                for (const auto& lt : lp.terms()) {
                                    Monomial m(h->a1()->nvars());
                                    for (std::size_t v = 0; v < h->a1()->nvars(); ++v)
                                        m[v] = lt.mono[v];
                                    lp_a1 = lp_a1 + Poly::monomial(h->a1()->ctx(), m, lt.coeff);
                                }
                                AlgebraElement contrib = h->a1()->nf(
                                    lp_a1 * Poly::monomial(h->a1()->ctx(), coeff, t.coeff));
                                std::size_t k = static_cast<std::size_t>(gen);
                                coaction.at(k, j) = coaction.at(k, j) + contrib;
                            }
                        }
                    }
                }
                for (std::size_t j = 0; j < seen.size(); ++j)
                    if (!seen[j])
                        throw InvalidArgument("psi misses generator '" + x.gens[j] + "'");
                w.comodules[x.name] = Comodule::create(h, u, coaction);
                break;
            }
            case DefFile::Kind::comodule_map: {
                const auto& x = f.comodule_maps[idx];
                auto sit = w.comodules.find(x.source), tit = w.comodules.find(x.target);
                if (sit == w.comodules.end() || tit == w.comodules.end())
                    throw InvalidArgument("comodulemap '" + x.name + "' references unknown comodules");
                const ComodulePtr& src = sit->second;
                const ComodulePtr& tgt = tit->second;
                const DefComodule* src_def = nullptr;
                const DefComodule* tgt_def = nullptr;
                for (const auto& c : f.comodules) {
                    if (c.name == x.source) src_def = &c;
                    if (c.name == x.target) tgt_def = &c;
                }
                if (!src_def || !tgt_def)
                    throw InvalidArgument("comodulemap endpoints must be file-defined comodules");
                Mat m(src->underlying()->ring(), tgt->n_gens(), src->n_gens());
                for (const auto& [g, e] : x.images) {
                    auto git = std::find(src_def->gens.begin(), src_def->gens.end(), g);
                    if (git == src_def->gens.end())
                        throw InvalidArgument("comodulemap images unknown generator '" + g + "'");
                    std::size_t j = static_cast<std::size_t>(git - src_def->gens.begin());
                    auto col = parse_combination(src->underlying()->ring(), tgt_def->gens, e);
                    for (std::size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
                }
                w.comodule_maps.emplace(x.name, ComoduleMap(src, tgt, m));
                break;
            }
            case DefFile::Kind::complex: {
                const auto& x = f.complexes[idx];
                auto hit = w.algebroids.find(x.algebroid);
                if (hit == w.algebroids.end())
                    throw InvalidArgument("complex '" + x.name + "' references unknown algebroid");
                std::map<int, ComodulePtr> terms;
                for (const auto& [n, t] : x.terms) {
                    auto cit = w.comodules.find(t);
                    if (cit == w.comodules.end())
                        throw InvalidArgument("complex term references unknown comodule '" + t + "'");
                    terms[n] = cit->second;
                }
                std::map<int, ComoduleMap> diffs;
                for (const auto& [n, dname] : x.diffs) {
                    auto dit = w.comodule_maps.find(dname);
                    if (dit == w.comodule_maps.end())
                        throw InvalidArgument("complex differential references unknown map '" +
                                              dname + "'");
                    diffs.emplace(n, dit->second);
                }
                w.complexes[x.name] =
                    std::make_shared<Complex>(hit->second, std::move(terms), std::move(diffs));
                break;
            }
        }
    }
    return w;
}

}  // namespace cobar
