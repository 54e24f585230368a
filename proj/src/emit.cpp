#include "jmod/emit.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace jmod {

using nlohmann::json;

std::string segment_text(const Segment& s) {
    std::ostringstream os;
    os << "Z[" << s.a << ".." << s.b << "]@" << s.line;
    return os.str();
}

std::string multisegment_text(const Multisegment& ms) {
    if (ms.empty()) return "1";
    std::ostringstream os;
    const auto& segs = ms.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (i) os << " * ";
        os << segment_text(segs[i]);
    }
    return os.str();
}

static std::string splits_text(const std::vector<SplitVector>& splits) {
    std::ostringstream os;
    for (std::size_t i = 0; i < splits.size(); ++i) {
        if (i) os << ",";
        os << "(";
        for (std::size_t j = 0; j < splits[i].size(); ++j) {
            if (j) os << ",";
            os << splits[i][j];
        }
        os << ")";
    }
    return os.str();
}

std::string formal_sum_text(const FormalSum& sum) {
    if (sum.empty()) return "0 (empty sum)\n";
    std::ostringstream os;
    for (const auto& [key, splits] : sum.terms()) {
        os << multisegment_text(key.first) << "  (x)  "
           << multisegment_text(key.second) << "   [mult " << splits.size()
           << "; splits " << splits_text(splits) << "]\n";
    }
    return os.str();
}

std::string levi_sum_text(const LeviSum& sum) {
    if (sum.empty()) return "0 (empty sum)\n";
    std::ostringstream os;
    for (const auto& [factors, mult] : sum.terms()) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "  (x)  ";
            os << multisegment_text(factors[i]);
        }
        os << "   [mult " << mult << "]\n";
    }
    return os.str();
}

std::string verdict_text(const Verdict& v) {
    std::ostringstream os;
    os << "checked: " << v.checked << "\n";
    os << "violations: " << v.violations.size() << "\n";
    for (const auto& viol : v.violations) {
        os << "  [" << viol.kind << "] ms=" << multisegment_text(viol.ms)
           << " l=" << viol.l << " " << viol.detail;
        if (viol.kind == "multiplicity")
            os << " term=" << multisegment_text(viol.left) << " (x) "
               << multisegment_text(viol.right) << " splits="
               << splits_text(viol.splits);
        os << "\n";
    }
    return os.str();
}

json segment_json(const Segment& s) {
    return json{{"line", s.line}, {"a", s.a}, {"b", s.b}};
}

json multisegment_json(const Multisegment& ms) {
    json arr = json::array();
    for (const Segment& s : ms.segments()) arr.push_back(segment_json(s));
    return arr;
}

json formal_sum_json(const FormalSum& sum) {
    json terms = json::array();
    for (const auto& [key, splits] : sum.terms()) {
        json t;
        t["left"] = multisegment_json(key.first);
        t["right"] = multisegment_json(key.second);
        t["multiplicity"] = splits.size();
        t["split_vectors"] = splits;
        terms.push_back(std::move(t));
    }
    return json{{"terms", terms},
                {"total_multiplicity", sum.total_multiplicity()}};
}

json levi_sum_json(const LeviSum& sum) {
    json terms = json::array();
    for (const auto& [factors, mult] : sum.terms()) {
        json fs = json::array();
        for (const Multisegment& f : factors) fs.push_back(multisegment_json(f));
        terms.push_back(json{{"factors", fs}, {"multiplicity", mult}});
    }
    return json{{"terms", terms},
                {"total_multiplicity", sum.total_multiplicity()}};
}

json arrangement_sum_json(const ArrangementSum& sum) {
    json terms = json::array();
    for (const auto& [arr, mult] : sum.terms()) {
        json blocks = json::array();
        for (const auto& block : arr) {
            json pts = json::array();
            for (const CuspidalPoint& p : block)
                pts.push_back(json{{"line", p.line}, {"exponent", p.exponent}});
            blocks.push_back(std::move(pts));
        }
        terms.push_back(json{{"blocks", blocks}, {"multiplicity", mult}});
    }
    return json{{"terms", terms},
                {"total_multiplicity", sum.total_multiplicity()}};
}

json verdict_json(const Verdict& v) {
    json viols = json::array();
    for (const auto& viol : v.violations) {
        json j;
        j["kind"] = viol.kind;
        j["detail"] = viol.detail;
        j["multisegment"] = multisegment_json(viol.ms);
        j["l"] = viol.l;
        if (viol.kind == "multiplicity") {
            j["left"] = multisegment_json(viol.left);
            j["right"] = multisegment_json(viol.right);
            j["split_vectors"] = viol.splits;
        }
        viols.push_back(std::move(j));
    }
    return json{{"checked", v.checked}, {"violations", viols}};
}

json matrices_json(const std::vector<SplitMatrix>& ms) {
    json arr = json::array();
    for (const SplitMatrix& m : ms) arr.push_back(m.entries);
    return json{{"count", ms.size()}, {"matrices", arr}};
}

}  // namespace jmod
