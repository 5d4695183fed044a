#include <algorithm>

#include "mdim/harness.hpp"

namespace mdim {

namespace {

struct TableBuilder {
    const DistanceMatrix& d;
    RepresentationTable& table;
    int n;

    void add(int v, std::string label, DistanceMultiset closed) {
        if (v < 0 || v >= n) return;
        std::sort(closed.begin(), closed.end());
        table.rows.push_back({v, std::move(label), representation(d, v, table.witness), std::move(closed)});
    }

    void finish() {
        std::vector<char> covered(static_cast<std::size_t>(n), 0);
        for (const auto& r : table.rows) covered[static_cast<std::size_t>(r.vertex)] = 1;
        for (int v = 0; v < n; ++v)
            if (!covered[static_cast<std::size_t>(v)]) table.uncovered.push_back(v);
        std::stable_sort(table.rows.begin(), table.rows.end(),
                         [](const TableRow& a, const TableRow& b) { return a.vertex < b.vertex; });
    }
};

std::string sub(const std::string& s) { return "v_{" + s + "}"; }

}  // namespace

std::vector<TableRow> RepresentationTable::mismatches() const {
    std::vector<TableRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out), [](const TableRow& r) { return !r.match(); });
    return out;
}

RepresentationTable cycle_table(int n) {
    if (n < 6) throw InvalidParameter("cycle table needs n >= 6");
    const Graph g = generate(family::Cycle{n});
    const DistanceMatrix d = all_pairs_distances(g);
    RepresentationTable table;
    table.name = "cycle:" + std::to_string(n);
    table.witness = {0, 1, 3};
    TableBuilder b{d, table, n};
    const int t = n / 2;

    b.add(0, "v_0", {0, 1, 3});
    b.add(1, "v_1", {0, 1, 2});
    b.add(2, "v_2", {1, 1, 2});
    b.add(3, "v_3", {0, 2, 3});
    for (int i = 4; i < t; ++i) b.add(i, sub("i") + ", i=" + std::to_string(i), {i - 3, i - 1, i});
    b.add(t, "v_t", {t - 3, t - 1, t});
    if (n % 2 == 0) {
        b.add(t + 1, sub("t+1"), {t - 2, t - 1, t});
        b.add(t + 2, sub("t+2"), {t - 2, t - 1, t - 1});
        b.add(t + 3, sub("t+3"), {t - 3, t - 2, t});
        for (int i = 4; i < t; ++i) b.add(i + t, sub("i+t") + ", i=" + std::to_string(i), {t - i, t - i + 1, t - i + 3});
    } else {
        b.add(t + 1, sub("t+1"), {t - 2, t, t});
        b.add(t + 2, sub("t+2"), {t - 1, t - 1, t});
        b.add(t + 3, sub("t+3"), {t - 2, t - 1, t});
        b.add(t + 4, sub("t+4"), {t - 3, t - 2, t});
        for (int i = 4; i < t; ++i)
            b.add(i + t + 1, sub("i+t+1") + ", i=" + std::to_string(i), {t - i, t - i + 1, t - i + 3});
    }
    b.finish();
    return table;
}

RepresentationTable grid_table(int m, int n) {
    if (m < 3 || n < 2) throw InvalidParameter("grid table needs m >= 3 and n >= 2");
    const Graph g = generate(family::Grid{m, n});
    const DistanceMatrix d = all_pairs_distances(g);
    RepresentationTable table;
    table.name = "grid:" + std::to_string(m) + "x" + std::to_string(n);
    table.witness = {0, 1, 2 * n};
    TableBuilder b{d, table, m * n};
    const auto id = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    const auto at = [](int i, int j) { return "v_{" + std::to_string(i) + "," + std::to_string(j) + "}"; };

    b.add(id(1, 1), "v_{1,1}", {0, 1, 2});
    b.add(id(2, 1), "v_{2,1}", {1, 1, 2});
    for (int i = 3; i <= m; ++i) b.add(id(i, 1), "v_{i,1} at " + at(i, 1), {i - 3, i - 1, i});
    for (int j = 2; j <= n; ++j) {
        b.add(id(1, j), "v_{1,j} at " + at(1, j), {j - 2, j - 1, j + 1});
        b.add(id(2, j), "v_{2,j} at " + at(2, j), {j - 1, j, j});
        for (int i = 3; i <= m; ++i) b.add(id(i, j), "v_{i,j} at " + at(i, j), {i + j - 4, i + j - 3, i + j - 2});
    }
    b.finish();
    return table;
}

}  // namespace mdim
