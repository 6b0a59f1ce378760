//! Segmentation of dynamic objects from static background in RGB-D feature
//! tracks, and camera motion estimation from the static group only.
//!
//! The core idea: map points observed by an RGB-D camera keep constant
//! pairwise 3-D separations as long as both points sit on static structure.
//! A sparse correlation graph over the tracked points (Delaunay triangulation
//! in pixel space) encodes those expectations; edges whose separation changes
//! beyond the propagated sensor uncertainty are cut, and the connected
//! components that split off from the dominant static group are flagged as
//! moving objects. Pose estimation then weights dynamic points to zero.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `dynseg` crate.
//!
//! Module map:
//! - [`geometry`]: camera model, SE(3) poses, backprojection, depth noise and
//!   covariance propagation
//! - [`graph`]: correlation graph construction, consistency pruning,
//!   connected components, static/dynamic classification
//! - [`localmap`]: map points, keyframes and the dynamic-point lifecycle
//! - [`estimation`]: RANSAC pose initialization and weighted motion-only
//!   refinement
//! - [`simulator`]: synthetic dynamic scenes with ground truth
//! - [`tracks`]: the line-based track interchange format
//! - [`evaluation`]: ATE/RPE trajectory metrics, segmentation metrics, TUM
//!   trajectory IO
//! - [`pipeline`]: the frame-by-frame engine tying the above together

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod estimation;
pub mod evaluation;
pub mod geometry;
pub mod graph;
pub mod localmap;
pub mod pipeline;
pub mod simulator;
pub mod tracks;

pub use geometry::{CameraIntrinsics, NoiseParams, Observation, PointCovariance, PoseSE3};
pub use graph::{ComponentLabeling, CorrelationEdge, CorrelationGraph, EdgeTest};
pub use localmap::{Keyframe, LocalMap, MapPoint, PointStatus};

/// Identifier of a tracked feature / map point.
pub type PointId = u64;

/// Frame index within a sequence.
pub type FrameId = u64;

/// Keyframe identifier (strictly increasing with time).
pub type KeyframeId = u64;
