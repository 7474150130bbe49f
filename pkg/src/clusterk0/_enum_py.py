"""Pure-Python backtracking kernel for angulation search.

Mirrors ``_enum_cy.pyx`` exactly; used when the extension is not built.
"""


class NodeLimitExceeded(RuntimeError):
    pass


def _search(cross, k, limit, max_nodes, collect):
    N = len(cross)
    blocked = [0] * N
    chosen = []
    out = []
    count = 0
    nodes = 0
    # explicit stack of next candidate index per depth
    stack = [0]
    while stack:
        depth = len(chosen)
        start = stack[-1]
        if depth == k:
            count += 1
            if collect:
                out.append(tuple(chosen))
            if limit is not None and count >= limit:
                break
            stack.pop()
            last = chosen.pop()
            for j in range(N):
                if cross[last][j]:
                    blocked[j] -= 1
            continue
        # need k - depth more picks from indices >= start
        nxt = -1
        for i in range(start, N - (k - depth) + 1):
            if not blocked[i]:
                nxt = i
                break
        if nxt < 0:
            stack.pop()
            if chosen:
                last = chosen.pop()
                for j in range(N):
                    if cross[last][j]:
                        blocked[j] -= 1
            continue
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise NodeLimitExceeded(f"search exceeded {max_nodes} nodes")
        stack[-1] = nxt + 1
        chosen.append(nxt)
        row = cross[nxt]
        for j in range(N):
            if row[j]:
                blocked[j] += 1
        stack.append(nxt + 1)
    return out, count


def angulations(cross, k, limit=None, max_nodes=None):
    return _search(cross, k, limit, max_nodes, True)[0]


def count_angulations(cross, k, max_nodes=None):
    return _search(cross, k, None, max_nodes, False)[1]
