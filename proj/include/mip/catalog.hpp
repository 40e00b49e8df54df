#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mip/group.hpp"
#include "mip/group_io.hpp"

namespace mip {

// The thirteen 2-groups of class 3 with |G : Z(G)| = |Frat(G)| = 8 and no
// elementary abelian direct factor: six of order 32, six of order 64, one
// of order 128.  Shipped as permutation-generator files under data/groups.
struct CorpusEntry {
    std::string id;        // e.g. "SG(32,9)"
    std::string file;      // file name under the data directory
    long long order = 0;
    // gates re-checked at load time
    long long center_order = 0;
    long long frattini_order = 0;
    long long socle_order = 0;
    int nilpotency_class = 0;
};
const std::vector<CorpusEntry>& corpus_index();

std::string data_dir(); // env MIPKIT_DATA, else the compiled-in default

// Loads a corpus group by id and re-validates the gates above.
// Throws ValidationFailed if the file does not match its index entry.
LoadedGroup load_corpus_group(const std::string& id);
std::vector<LoadedGroup> load_corpus(long long order_filter = 0);

// name -> e (generator count of the mod-2 cohomology ring), parsed from
// data/annotations/*.txt ("<name> <e>" lines, later files win)
std::map<std::string, int> load_annotations();

// Constructors for standard groups (identity at index 0, validated tables).
Group cyclic_group(int n);
Group abelian_group(const std::vector<int>& cyclic_orders);
Group dihedral_group(int order);      // order = 2^k >= 4; includes Klein four
Group quaternion_group(int order);    // order = 2^k >= 8
Group semidihedral_group(int order);  // order = 2^k >= 16
Group extraspecial_d8(), extraspecial_q8();

} // namespace mip
