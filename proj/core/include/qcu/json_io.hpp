/**
 * This code is part of qcu.
 *
 * (C) Copyright qcu contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Any modifications or derivative works of this code must retain this
 * copyright notice, and modified files need to carry a notice indicating
 * that they have been altered from the originals.
 */

#ifndef QCU_JSON_IO_HPP_
#define QCU_JSON_IO_HPP_

#include <json.hpp>

#include "qcu/matrix.hpp"
#include "qcu/multictrl.hpp"
#include "qcu/optics.hpp"
#include "qcu/synth.hpp"
#include "qcu/tomo.hpp"

namespace qcu {

/// Matrices travel as {"rows": n, "cols": m, "re": [...], "im": [...]} with
/// row-major entry order. Deserialization validates every field and names
/// the offending one on failure.
void to_json(nlohmann::json& j, const ComplexMatrix& m);
void from_json(const nlohmann::json& j, ComplexMatrix& m);

namespace synth {
void to_json(nlohmann::json& j, const CUParams& p);
void from_json(const nlohmann::json& j, CUParams& p);
void to_json(nlohmann::json& j, const ZYZParams& z);
void from_json(const nlohmann::json& j, ZYZParams& z);
void to_json(nlohmann::json& j, const ControlledUPlan& plan);
void from_json(const nlohmann::json& j, ControlledUPlan& plan);
} // namespace synth

namespace optics {
void to_json(nlohmann::json& j, const ModeTransfer& t);
void from_json(const nlohmann::json& j, ModeTransfer& t);
void to_json(nlohmann::json& j, const SuccessReport& r);
void from_json(const nlohmann::json& j, SuccessReport& r);
} // namespace optics

namespace multictrl {
void to_json(nlohmann::json& j, const GateOp& g);
void from_json(const nlohmann::json& j, GateOp& g);
void to_json(nlohmann::json& j, const QuditCircuit& c);
void from_json(const nlohmann::json& j, QuditCircuit& c);
void to_json(nlohmann::json& j, const ResourceReport& r);
} // namespace multictrl

namespace tomo {
void to_json(nlohmann::json& j, const ChoiMatrix& c);
void from_json(const nlohmann::json& j, ChoiMatrix& c);
void to_json(nlohmann::json& j, const Tomogram& t);
void from_json(const nlohmann::json& j, Tomogram& t);
} // namespace tomo

} // namespace qcu

#endif // QCU_JSON_IO_HPP_
