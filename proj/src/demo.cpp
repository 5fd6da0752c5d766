#include "gm/demo.hpp"

#include <ostream>
#include <utility>
#include <vector>

#include "gm/evaluator.hpp"
#include "gm/machine.hpp"
#include "gm/seeding.hpp"

namespace gm {

ProblemInstance demo_instance() {
    return make_instance(ProblemKind::OpenPathTsp, 4,
                         {0, 1, 2, 3,  //
                          1, 0, 1, 2,  //
                          2, 1, 0, 1,  //
                          3, 2, 1, 0});
}

Permutation demo_forced_base() { return {0, 2, 3, 1}; }

namespace {

// A bucket table reduced to printable form: (fitness, block labels).
using Table = std::vector<std::pair<double, std::vector<std::string>>>;

Table table_of(const FitnessList& list) {
    Table table;
    for (const FitnessBucket& bucket : list.ordered_buckets()) {
        std::vector<std::string> labels;
        labels.reserve(bucket.blocks.size());
        for (const BuildingBlock& block : bucket.blocks)
            labels.push_back(block_label(block.gene, block.position, list.gene_count()));
        table.emplace_back(bucket.fitness, std::move(labels));
    }
    return table;
}

void print_table(std::ostream& out, const Table& table) {
    for (const auto& [fitness, labels] : table) {
        out << "  fitness " << format_number(fitness) << ":";
        for (const std::string& label : labels) out << ' ' << label;
        out << '\n';
    }
}

// Seeds the machine from the forced base, narrating each chromosome.
void seed_and_narrate(std::ostream& out, GeneMachine& machine, Evaluator& eval) {
    const Permutation base = demo_forced_base();
    out << "seeding with base " << permutation_label(base) << ":\n";
    const auto rows = latin_square_rows(base);
    seed_with_base(machine, eval, base);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double f = evaluate(eval.instance(), rows[i]);
        out << "  chromosome " << i + 1 << ": " << permutation_label(rows[i]) << "  fitness "
            << format_number(f) << '\n';
    }
    out << "best retained: " << permutation_label(machine.best->genes) << "  fitness "
        << format_number(machine.best->fitness) << '\n';
}

}  // namespace

void print_block_table(std::ostream& out, const FitnessList& list) {
    print_table(out, table_of(list));
}

void run_seeding_demo(std::ostream& out) {
    const ProblemInstance inst = demo_instance();
    out << "distance matrix (" << inst.n << " cities, open path):\n";
    for (int i = 0; i < inst.n; ++i) {
        out << " ";
        for (int j = 0; j < inst.n; ++j) out << ' ' << format_number(inst.at(i, j));
        out << '\n';
    }
    out << '\n';

    Evaluator eval(inst);
    GeneMachine machine(inst.n);
    seed_and_narrate(out, machine, eval);
    out << "\nblock table after seeding:\n";
    print_block_table(out, machine.list);
}

bool run_reference_demo(std::ostream& out) {
    const Table expected_seeded{
        {4.0, {"A2", "A4", "B1", "B3", "C1", "C3", "D2", "D4"}},
        {5.0, {"A1", "A3", "B2", "B4", "C2", "C4", "D1", "D3"}},
    };
    const Table expected_after{
        {3.0, {"A1", "B2", "C3", "D4"}},
        {4.0, {"A2", "A4", "B1", "B3", "C1", "D2"}},
        {5.0, {"A3", "B4", "C2", "C4", "D1", "D3"}},
    };

    const ProblemInstance inst = demo_instance();
    Evaluator eval(inst);
    GeneMachine machine(inst.n);
    seed_and_narrate(out, machine, eval);

    out << "\nblock table after seeding:\n";
    const Table seeded = table_of(machine.list);
    print_table(out, seeded);

    Chromosome observed{{0, 1, 2, 3}, 0.0};
    observed.fitness = eval.evaluate(observed.genes);
    machine.list.record_observation(observed);
    out << "\nobserving " << permutation_label(observed.genes) << "  fitness "
        << format_number(observed.fitness) << "\n\nblock table after observation:\n";
    const Table after = table_of(machine.list);
    print_table(out, after);

    bool ok = true;
    if (observed.fitness != 3.0) {
        out << "\nmismatch: expected the observed chromosome to have fitness 3, got "
            << format_number(observed.fitness) << '\n';
        ok = false;
    }
    if (seeded != expected_seeded) {
        out << "\nmismatch: expected block table after seeding:\n";
        print_table(out, expected_seeded);
        ok = false;
    }
    if (after != expected_after) {
        out << "\nmismatch: expected block table after observation:\n";
        print_table(out, expected_after);
        ok = false;
    }
    if (ok) out << "\nall tables match\n";
    return ok;
}

}  // namespace gm
