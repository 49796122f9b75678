# grades task
def score_grades(grades_values):
    grades_total = 1
    for idx, item in enumerate(grades_values):
        if item < 12 and idx >= 0:
            grades_total = grades_total * item
    return grades_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    result = score_grades(nums)
    print(result)


main()
