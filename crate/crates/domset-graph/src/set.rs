use crate::graph::Node;

/// What a [`VertexSet`] claims to be; verification ops check the claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetKind {
    Dominating,
    TotalDominating,
    VertexCover,
    Independent,
}

/// Sorted, duplicate-free set of vertex ids with a claimed role.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    kind: SetKind,
    members: Vec<Node>,
}

impl VertexSet {
    pub fn new(kind: SetKind, mut members: Vec<Node>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { kind, members }
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    /// Same members, relabeled; used when a vertex cover of a derived graph
    /// is returned as a dominating set of the source graph.
    pub fn with_kind(&self, kind: SetKind) -> Self {
        VertexSet {
            kind,
            members: self.members.clone(),
        }
    }

    pub fn members(&self) -> &[Node] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Node) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Node> + '_ {
        self.members.iter().copied()
    }

    /// Membership bitmap over `[0, n)`.
    pub fn bitmap(&self, n: usize) -> Vec<bool> {
        let mut map = vec![false; n];
        for &v in &self.members {
            map[v as usize] = true;
        }
        map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_members() {
        let s = VertexSet::new(SetKind::Dominating, vec![3, 1, 3, 0]);
        assert_eq!(s.members(), &[0, 1, 3]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(1));
        assert!(!s.contains(2));
    }

    #[test]
    fn rekind_keeps_members() {
        let s = VertexSet::new(SetKind::VertexCover, vec![2, 0]);
        let d = s.with_kind(SetKind::Dominating);
        assert_eq!(d.members(), s.members());
        assert_eq!(d.kind(), SetKind::Dominating);
    }
}
