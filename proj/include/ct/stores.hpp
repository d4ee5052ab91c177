#pragma once
// Line-delimited JSON stores for normalized threads and consensus labels.
// Downstream commands read these instead of re-parsing raw CSVs.

#include <map>
#include <string>
#include <vector>

#include "ct/annotation.hpp"
#include "ct/thread.hpp"

namespace ct {

// One consensus outcome as persisted by the collate command.
struct StoredLabel {
    std::string post_id;
    bool retained = false;
    CodeSet codes;                   // consensus codes (empty when dropped)
    int conflated = -1;              // -1 when not retained
    std::map<int, double> agreement; // per-code agreement fraction
};

std::string thread_to_json(const Thread& t);
Thread thread_from_json(const std::string& line);

void save_thread_store(const std::vector<Thread>& threads, const std::string& path);
std::vector<Thread> load_thread_store(const std::string& path);

std::string label_to_json(const StoredLabel& l);
StoredLabel label_from_json(const std::string& line);

void save_label_store(const std::vector<StoredLabel>& labels, const std::string& path);
std::vector<StoredLabel> load_label_store(const std::string& path);

// Retained labels as the map consumed by compute_thread_stats.
LabelMap to_label_map(const std::vector<StoredLabel>& labels);

} // namespace ct
