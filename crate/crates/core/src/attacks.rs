//! Attack simulation under limited knowledge.
//!
//! An attacker discovers the neighbourhood of a center vertex, ranks the
//! discovered vertices or edges by a criterion (edge betweenness, vertex
//! betweenness or degree), removes the selected element from the global
//! graph, and repeats. After every removal the damage of the attacker's view
//! (local) and of the whole graph (global) is recorded.
//!
//! A profile is written `<C>:<V>`: `C` is `E`, `V` or `D` for edge
//! betweenness, vertex betweenness or degree, and `V` is `L`, `M`, `H` or `R`
//! for the lowest, median, highest or a random element.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::centrality::{edge_betweenness, extremal_by, vertex_betweenness, Element, Selector};
use crate::damage::damage_with;
use crate::error::ProfileError;
use crate::exec::Exec;
use crate::format::g6;
use crate::fragmentation::FragmentProfile;
use crate::graph::{DiscoveredView, Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// Edges by edge betweenness.
    Edge,
    /// Vertices by vertex betweenness.
    Vertex,
    /// Vertices by degree.
    Degree,
}

impl Criterion {
    pub fn letter(self) -> char {
        match self {
            Criterion::Edge => 'E',
            Criterion::Vertex => 'V',
            Criterion::Degree => 'D',
        }
    }

    pub fn targets_edges(self) -> bool {
        self == Criterion::Edge
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Recompute {
    /// Rank once on the initial view and consume that order.
    Initial,
    /// Re-rank after every removal.
    Recomputed,
}

/// How the attacker's view evolves as the graph is damaged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Knowledge {
    /// The vertices discovered at the start stay known; each step sees the
    /// current edges among the ones still alive.
    Retained,
    /// Discovery is redone from the center every step. If the center has been
    /// removed, the highest-degree alive vertex of the previous view (lowest
    /// id on ties) becomes the new center.
    Rediscovered,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AttackProfile {
    pub criterion: Criterion,
    pub selector: Selector,
    pub recompute: Recompute,
    /// `None` discovers the center's whole component.
    pub radius: Option<usize>,
    pub center: VertexId,
    pub knowledge: Knowledge,
    pub seed: u64,
}

impl AttackProfile {
    pub fn new(criterion: Criterion, selector: Selector) -> Self {
        AttackProfile {
            criterion,
            selector,
            recompute: Recompute::Recomputed,
            radius: None,
            center: 0,
            knowledge: Knowledge::Retained,
            seed: 0,
        }
    }

    pub fn with_radius(mut self, radius: Option<usize>) -> Self {
        self.radius = radius;
        self
    }

    pub fn with_center(mut self, center: VertexId) -> Self {
        self.center = center;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_recompute(mut self, recompute: Recompute) -> Self {
        self.recompute = recompute;
        self
    }

    pub fn with_knowledge(mut self, knowledge: Knowledge) -> Self {
        self.knowledge = knowledge;
        self
    }

    /// Short `<C>:<V>` name.
    pub fn label(&self) -> String {
        format!("{}:{}", self.criterion.letter(), self.selector.letter())
    }
}

impl fmt::Display for AttackProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub fn parse_profile(text: &str) -> Result<AttackProfile, ProfileError> {
    let bad = || ProfileError::BadSyntax(text.to_string());
    let (c, v) = text.trim().split_once(':').ok_or_else(bad)?;
    let criterion = match c {
        "E" => Criterion::Edge,
        "V" => Criterion::Vertex,
        "D" => Criterion::Degree,
        _ => return Err(bad()),
    };
    let selector = match v {
        "L" => Selector::Low,
        "M" => Selector::Median,
        "H" => Selector::High,
        "R" => Selector::Random,
        _ => return Err(bad()),
    };
    Ok(AttackProfile::new(criterion, selector))
}

impl FromStr for AttackProfile {
    type Err = ProfileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_profile(s)
    }
}

/// Every candidate in the view with its criterion value, keyed by global id.
fn scored_candidates(view: &DiscoveredView, criterion: Criterion) -> Vec<(Element, f64)> {
    let local = &view.local;
    match criterion {
        Criterion::Edge => edge_betweenness(local)
            .entries
            .into_iter()
            .map(|e| match e.id {
                Element::Edge(le) => (Element::Edge(view.global_edge(le)), e.raw),
                Element::Vertex(_) => unreachable!("edge table"),
            })
            .collect(),
        Criterion::Vertex => vertex_betweenness(local)
            .entries
            .into_iter()
            .map(|e| match e.id {
                Element::Vertex(lv) => (Element::Vertex(view.global_id(lv)), e.raw),
                Element::Edge(_) => unreachable!("vertex table"),
            })
            .collect(),
        Criterion::Degree => local
            .alive_vertices()
            .map(|lv| (Element::Vertex(view.global_id(lv)), local.degree(lv) as f64))
            .collect(),
    }
}

/// Picks the next element to remove from the view. `None` when the view has
/// nothing of the profile's kind left.
pub fn select_target(
    view: &DiscoveredView,
    profile: &AttackProfile,
    rng: &mut ChaCha8Rng,
) -> Option<(Element, f64)> {
    extremal_by(
        &scored_candidates(view, profile.criterion),
        profile.selector,
        rng,
    )
}

/// Candidates ordered for consumption under [`Recompute::Initial`]; ties in
/// random order.
fn initial_order(
    mut candidates: Vec<(Element, f64)>,
    selector: Selector,
    rng: &mut ChaCha8Rng,
) -> Vec<(Element, f64)> {
    candidates.shuffle(rng);
    match selector {
        Selector::Random => {}
        Selector::Low => candidates.sort_by(|a, b| a.1.total_cmp(&b.1)),
        Selector::High => candidates.sort_by(|a, b| b.1.total_cmp(&a.1)),
        Selector::Median => {
            let mut values: Vec<f64> = candidates.iter().map(|c| c.1).collect();
            values.sort_by(f64::total_cmp);
            let median = values.get(values.len().saturating_sub(1) / 2).copied();
            if let Some(m) = median {
                candidates.sort_by(|a, b| (a.1 - m).abs().total_cmp(&(b.1 - m).abs()));
            }
        }
    }
    candidates
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    MaxSteps,
    /// The view holds no more elements of the attacked kind.
    NothingToAttack,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceStep {
    /// 1-based.
    pub step: usize,
    pub removed: Element,
    /// Criterion value of the removed element when it was selected.
    pub criterion: f64,
    pub local_damage: f64,
    pub global_damage: f64,
    pub local: FragmentProfile,
    pub global: FragmentProfile,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DamageTrace {
    pub profile: AttackProfile,
    pub steps: Vec<TraceStep>,
    pub stop: StopReason,
}

impl DamageTrace {
    pub const CSV_HEADER: [&'static str; 9] = [
        "step",
        "kind",
        "removed",
        "criterion",
        "local_damage",
        "global_damage",
        "local_lcc",
        "global_lcc",
        "global_m",
    ];

    pub fn csv_records(&self) -> impl Iterator<Item = Vec<String>> + '_ {
        let kind = if self.profile.criterion.targets_edges() {
            "edge"
        } else {
            "vertex"
        };
        self.steps.iter().map(move |s| {
            vec![
                s.step.to_string(),
                kind.to_string(),
                s.removed.to_string(),
                g6(s.criterion),
                g6(s.local_damage),
                g6(s.global_damage),
                s.local.lcc().to_string(),
                s.global.lcc().to_string(),
                s.global.component_count().to_string(),
            ]
        })
    }

    /// Area under the global damage curve, one unit of width per removal.
    pub fn auc(&self) -> f64 {
        self.steps.iter().map(|s| s.global_damage).sum()
    }
}

fn present(g: &Graph, element: Element) -> bool {
    match element {
        Element::Vertex(v) => g.is_alive(v),
        Element::Edge(e) => g.has_edge(e.low(), e.high()),
    }
}

fn remove(g: &mut Graph, element: Element) {
    match element {
        Element::Vertex(v) => g.remove_vertex(v),
        Element::Edge(e) => g.remove_edge(e),
    }
    .expect("selected element is present");
}

/// Attacker knowledge across steps.
struct Observer {
    knowledge: Knowledge,
    radius: Option<usize>,
    center: Option<VertexId>,
    known: Vec<VertexId>,
}

impl Observer {
    fn new(g: &Graph, profile: &AttackProfile) -> Option<(Self, DiscoveredView)> {
        let view = g.discover(profile.center, profile.radius).ok()?;
        let obs = Observer {
            knowledge: profile.knowledge,
            radius: profile.radius,
            center: Some(profile.center),
            known: view.to_global.clone(),
        };
        Some((obs, view))
    }

    /// The view of the current (damaged) graph.
    fn view(&mut self, g: &Graph) -> Option<DiscoveredView> {
        match self.knowledge {
            Knowledge::Retained => {
                self.known.retain(|&v| g.is_alive(v));
                let (local, to_global) = g.induced_subgraph(&self.known);
                Some(DiscoveredView {
                    center: self.center?,
                    radius: self.radius,
                    local,
                    to_global,
                })
            }
            Knowledge::Rediscovered => {
                let center = match self.center.filter(|&c| g.is_alive(c)) {
                    Some(c) => c,
                    None => {
                        let c = self
                            .known
                            .iter()
                            .copied()
                            .filter(|&v| g.is_alive(v))
                            .max_by(|&a, &b| g.degree(a).cmp(&g.degree(b)).then(b.cmp(&a)))?;
                        self.center = Some(c);
                        c
                    }
                };
                let view = g.discover(center, self.radius).ok()?;
                self.known = view.to_global.clone();
                Some(view)
            }
        }
    }
}

/// Runs `profile` against a copy of `g` for at most `max_steps` removals.
pub fn run_attack(g: &Graph, profile: &AttackProfile, max_steps: usize) -> DamageTrace {
    run_attack_with(g, profile, max_steps, Exec::Sequential)
}

/// As [`run_attack`], with the damage kernels using `exec`.
pub fn run_attack_with(
    g: &Graph,
    profile: &AttackProfile,
    max_steps: usize,
    exec: Exec,
) -> DamageTrace {
    let mut global = g.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(profile.seed);
    let mut steps = Vec::new();
    let done = |steps: Vec<TraceStep>, stop| DamageTrace {
        profile: profile.clone(),
        steps,
        stop,
    };
    let Some((mut observer, initial)) = Observer::new(&global, profile) else {
        return done(steps, StopReason::NothingToAttack);
    };
    let mut queue = match profile.recompute {
        Recompute::Initial => {
            let mut order = initial_order(
                scored_candidates(&initial, profile.criterion),
                profile.selector,
                &mut rng,
            );
            order.reverse();
            Some(order)
        }
        Recompute::Recomputed => None,
    };
    let mut view = Some(initial);

    for step in 1..=max_steps {
        let Some(current) = view.take().or_else(|| observer.view(&global)) else {
            return done(steps, StopReason::NothingToAttack);
        };
        let pick = match queue.as_mut() {
            Some(order) => loop {
                match order.pop() {
                    Some(c) if present(&global, c.0) && in_view(&current, c.0) => break Some(c),
                    Some(_) => continue,
                    None => break None,
                }
            },
            None => select_target(&current, profile, &mut rng),
        };
        let Some((removed, criterion)) = pick else {
            return done(steps, StopReason::NothingToAttack);
        };
        remove(&mut global, removed);
        let after = observer.view(&global);
        let local_graph = after
            .as_ref()
            .map(|v| v.local.clone())
            .unwrap_or_else(|| Graph::empty(0));
        let local = damage_with(&local_graph, exec);
        let glob = damage_with(&global, exec);
        steps.push(TraceStep {
            step,
            removed,
            criterion,
            local_damage: local.damage,
            global_damage: glob.damage,
            local: local.fragments,
            global: glob.fragments,
        });
        view = after;
    }
    done(steps, StopReason::MaxSteps)
}

fn in_view(view: &DiscoveredView, element: Element) -> bool {
    match element {
        Element::Vertex(v) => view.local_id(v).is_some(),
        Element::Edge(e) => match (view.local_id(e.low()), view.local_id(e.high())) {
            (Some(a), Some(b)) => view.local.has_edge(a, b),
            _ => false,
        },
    }
}

/// Mean trace of one profile over several seeds.
#[derive(Clone, Debug, PartialEq)]
pub struct CampaignSummary {
    pub profile: AttackProfile,
    pub seed_count: usize,
    pub mean_local: Vec<f64>,
    pub mean_global: Vec<f64>,
    pub mean_local_lcc: Vec<f64>,
    pub mean_global_lcc: Vec<f64>,
    pub mean_global_m: Vec<f64>,
    /// Sum of the mean global damage curve.
    pub auc: f64,
}

impl CampaignSummary {
    pub const CSV_HEADER: [&'static str; 9] = [
        "profile",
        "seed_count",
        "auc",
        "step",
        "local_damage",
        "global_damage",
        "local_lcc",
        "global_lcc",
        "global_m",
    ];

    pub fn csv_records(&self) -> impl Iterator<Item = Vec<String>> + '_ {
        (0..self.mean_global.len()).map(move |i| {
            vec![
                self.profile.label(),
                self.seed_count.to_string(),
                g6(self.auc),
                (i + 1).to_string(),
                g6(self.mean_local[i]),
                g6(self.mean_global[i]),
                g6(self.mean_local_lcc[i]),
                g6(self.mean_global_lcc[i]),
                g6(self.mean_global_m[i]),
            ]
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Campaign {
    /// In input profile order.
    pub summaries: Vec<CampaignSummary>,
}

impl Campaign {
    /// Profile indices by decreasing AUC; ties keep input order.
    pub fn ranking(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.summaries.len()).collect();
        idx.sort_by(|&a, &b| self.summaries[b].auc.total_cmp(&self.summaries[a].auc));
        idx
    }

    pub fn auc_of(&self, label: &str) -> Option<f64> {
        self.summaries
            .iter()
            .find(|s| s.profile.label() == label)
            .map(|s| s.auc)
    }
}

/// Pads `values` to `len` by repeating its last entry (damage stays put once
/// an attack has stopped).
fn padded(values: impl Iterator<Item = f64>, len: usize) -> Vec<f64> {
    let mut v: Vec<f64> = values.collect();
    let last = v.last().copied().unwrap_or(0.0);
    v.resize(len, last);
    v
}

/// Runs every profile once per seed (the profile's own seed is replaced) and
/// averages the traces step by step. Cells run in parallel under `exec`.
pub fn campaign(
    g: &Graph,
    profiles: &[AttackProfile],
    seeds: &[u64],
    max_steps: usize,
    exec: Exec,
) -> Campaign {
    let cells: Vec<(usize, u64)> = (0..profiles.len())
        .flat_map(|p| seeds.iter().map(move |&s| (p, s)))
        .collect();
    let traces = exec.map(&cells, |&(p, s)| {
        run_attack_with(
            g,
            &profiles[p].clone().with_seed(s),
            max_steps,
            Exec::Sequential,
        )
    });
    let summaries = profiles
        .iter()
        .enumerate()
        .map(|(p, profile)| {
            let runs: Vec<&DamageTrace> = traces
                .iter()
                .zip(&cells)
                .filter(|(_, c)| c.0 == p)
                .map(|(t, _)| t)
                .collect();
            let len = runs.iter().map(|t| t.steps.len()).max().unwrap_or(0);
            let mean = |f: &dyn Fn(&TraceStep) -> f64| -> Vec<f64> {
                let mut acc = vec![0.0; len];
                for t in &runs {
                    for (a, x) in acc.iter_mut().zip(padded(t.steps.iter().map(f), len)) {
                        *a += x;
                    }
                }
                acc.iter_mut().for_each(|a| *a /= runs.len() as f64);
                acc
            };
            let mean_global = mean(&|s| s.global_damage);
            CampaignSummary {
                profile: profile.clone(),
                seed_count: runs.len(),
                auc: mean_global.iter().sum(),
                mean_local: mean(&|s| s.local_damage),
                mean_global,
                mean_local_lcc: mean(&|s| s.local.lcc() as f64),
                mean_global_lcc: mean(&|s| s.global.lcc() as f64),
                mean_global_m: mean(&|s| s.global.component_count() as f64),
            }
        })
        .collect();
    Campaign { summaries }
}
