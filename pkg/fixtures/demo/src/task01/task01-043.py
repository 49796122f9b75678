# grades task
def score_grades(values):
    grades_total = 1
    for x in values:
        if x < 10:
            grades_total = grades_total * x
    return grades_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    result = score_grades(nums)
    print(result)


main()
