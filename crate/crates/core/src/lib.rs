// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Finite media: token systems, the axioms that make them media, and the
//! correspondence with well-graded set families and partial cubes.

pub mod axioms;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod io;
pub mod morphisms;
pub mod pcube;
pub mod structure;
pub mod token;
pub mod wgfamily;

pub use axioms::{is_medium, Medium, MediumVerdict, Violation};
pub use error::{Error, Result};
pub use graph::{DistanceTable, EdgeLabel, LabeledGraph};
pub use token::{Message, ReversePairing, StateId, TokenId, TokenSystem};
pub use wgfamily::SetFamily;
