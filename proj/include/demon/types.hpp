#pragma once

namespace demon {

/// The two qubits of the engine: the working substance S and the demon D.
enum class Subsystem { S, D };

inline Subsystem other(Subsystem q) {
    return q == Subsystem::S ? Subsystem::D : Subsystem::S;
}

inline const char* name(Subsystem q) { return q == Subsystem::S ? "S" : "D"; }

} // namespace demon
