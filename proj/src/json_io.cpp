#include "mia/json_io.hpp"

#include <json.hpp>

namespace mia {

namespace {

nlohmann::json stages_json(const std::vector<Stage>& stages) {
    auto arr = nlohmann::json::array();
    for (const Stage& st : stages)
        arr.push_back({{"tx", st.transmitter}, {"dur", st.duration}, {"decoder", st.decoder}});
    return arr;
}

}  // namespace

std::string solution_to_json(const UnicastSolution& sol, const std::string& method) {
    nlohmann::json j;
    j["method"] = method;
    j["relay_set"] = sol.relay_set;
    j["stages"] = stages_json(sol.schedule.stages);
    j["delay"] = sol.delay;
    return j.dump(2) + "\n";
}

std::string path_solution_to_json(const PathSolution& sol) {
    nlohmann::json j;
    j["method"] = "sp";
    j["path"] = sol.path;
    j["delay"] = sol.delay;
    return j.dump(2) + "\n";
}

std::string energy_solution_to_json(const EnergySolution& sol) {
    nlohmann::json j;
    j["method"] = "energy";
    j["relay_set"] = sol.relay_set;
    auto arr = nlohmann::json::array();
    for (const EnergyStage& st : sol.stages)
        arr.push_back({{"tx", st.transmitter},
                       {"dur", st.duration},
                       {"psd", st.psd},
                       {"decoder", st.decoder}});
    j["stages"] = std::move(arr);
    j["delay"] = sol.delay;
    j["total_energy"] = sol.total_energy;
    j["d_max"] = sol.d_max;
    return j.dump(2) + "\n";
}

std::string broadcast_solution_to_json(const BroadcastSolution& sol) {
    nlohmann::json j;
    j["method"] = "broadcast";
    j["stages"] = stages_json(sol.stages);
    j["decoding_order"] = sol.decoding_order;
    j["delay"] = sol.delay;
    return j.dump(2) + "\n";
}

}  // namespace mia
