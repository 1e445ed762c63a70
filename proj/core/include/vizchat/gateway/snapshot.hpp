#pragma once

#include <cstddef>
#include <string_view>

#include <nlohmann/json.hpp>

#include "vizchat/dialogue/router.hpp"
#include "vizchat/visual/session_state.hpp"

namespace vizchat {

inline constexpr int kSnapshotVersion = 1;
inline constexpr std::size_t kSnapshotConversationTail = 20;

nlohmann::json to_json(const CameraState& camera);
nlohmann::json to_json(const CuttingPlaneState& plane);
nlohmann::json to_json(const Scene& scene, const SceneTree& tree);

/// Everything a renderer needs to draw the session: committed view, pose on
/// screen, the scene playing, pending options and the conversation tail.
///
///   {
///     "version": 1, "session_id": "...", "model": "T4 bacteriophage",
///     "view":      {"camera": {...}, "plane": {...}, "current_node": {"id","name"},
///                   "scale_level": 0, "highlights": ["id", ...]},
///     "displayed": {"camera": {...}, "plane": {...}, "highlights": [...]},
///     "animating": false,
///     "labels":    [{"id","name","label"}],      // current node and its children
///     "scene":     null | {"kind","target","speech","speech_done","animation_done","duration"},
///     "queue_length": 0,
///     "exploration": {"active", "options": [{"index","id","name"}], "visited": [...]},
///     "awaiting_detail": false,
///     "history_depth": 0,
///     "conversation": [{"speaker","text"}]
///   }
///
/// Camera objects carry target, distance, yaw, pitch, roll and the derived
/// eye, view_direction and up vectors. Options are indexed from zero.
nlohmann::json snapshot(const SessionState& session, std::string_view session_id);

/// Reply body for a query or selection.
nlohmann::json to_json(const QueryResult& result, const SceneTree& tree);

}  // namespace vizchat
